/// Size limits for the brute-force validators.
///
/// The naive triple loop costs `(n!)^3`, the centralizer method about
/// `n! * |Cent|^2` and wreath tables hold `t^m * m!` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for the naive triple loop over `S_n`.
    pub naive: usize,
    /// Largest `n` for which `S_n` is tabulated (centralizer method).
    pub centralizer: usize,
    /// Largest wreath product order `t^m * m!` that may be tabulated.
    pub wreath: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            naive: 5,
            centralizer: 8,
            wreath: 5000,
        }
    }
}
