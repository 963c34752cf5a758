//! Convolution engines.
