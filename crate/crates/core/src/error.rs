use thiserror::Error;

/// Errors raised by state validation and by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be non-empty and rectangular, got {rows}x{cols} with {len} entries")]
    Shape { rows: usize, cols: usize, len: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |m_ij - conj(m_ji)| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("trace must be 1, got {trace}")]
    Trace { trace: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("subsystem dimension must be at least 2, got {0}")]
    SubsystemDimension(usize),

    #[error("subsystem dims {dims:?} multiply to {product}, but the matrix side is {side}")]
    DimsProduct { dims: Vec<usize>, product: usize, side: usize },

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("{name} = {value} is outside {range}")]
    OutOfRange { name: &'static str, value: f64, range: &'static str },

    #[error("Bloch vector needs {expected} components, got {got}")]
    ComponentCount { expected: usize, got: usize },

    #[error("mean value of generator {index} has imaginary part {imag:e}")]
    ComplexMeanValue { index: usize, imag: f64 },

    #[error("Kraus operators are not complete: max |sum K^dag K - I| = {deviation:e}")]
    Incomplete { deviation: f64 },

    #[error("eigenvalue iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
