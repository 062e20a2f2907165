use crate::exactalg::RationalFunction;

/// 2x2 matrix over rational functions, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mat2(pub [[RationalFunction; 2]; 2]);

impl Mat2 {
    pub fn new(a: RationalFunction, b: RationalFunction, c: RationalFunction, d: RationalFunction) -> Self {
        Self([[a, b], [c, d]])
    }

    pub fn diag(a: RationalFunction, d: RationalFunction) -> Self {
        Self::new(a, RationalFunction::zero(), RationalFunction::zero(), d)
    }

    /// Row vector times matrix.
    pub fn left_apply(row: &[RationalFunction; 2], m: &Self) -> [RationalFunction; 2] {
        let n = &m.0;
        [
            &(&row[0] * &n[0][0]) + &(&row[1] * &n[1][0]),
            &(&row[0] * &n[0][1]) + &(&row[1] * &n[1][1]),
        ]
    }

    pub fn dot(row: &[RationalFunction; 2], col: &[RationalFunction; 2]) -> RationalFunction {
        &(&row[0] * &col[0]) + &(&row[1] * &col[1])
    }
}
