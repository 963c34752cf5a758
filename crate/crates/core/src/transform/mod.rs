//! Fourier transforms (circle, Euclidean, composite).
