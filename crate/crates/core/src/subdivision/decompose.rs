//! The cd-index of a subdivision as a sum of local cd-indices times upper-interval cd-indices.

use rayon::prelude::*;

use super::SubdivisionMap;
use crate::error::{Error, Result};
use crate::flag::{cd_index, local_index};
use crate::ncpoly::CdPolynomial;
use crate::poset::is_eulerian;

/// One base element with its local cd-index and the cd-index of the interval above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionRow {
    /// Id of the base element.
    pub sigma: String,
    /// Rank of the base element.
    pub rank: usize,
    /// Local cd-index of the preimage ideal with a maximum adjoined.
    pub local_cd: CdPolynomial,
    /// cd-index of `[sigma, top]`; 1 for the top itself.
    pub upper_cd: CdPolynomial,
}

/// Rows in base element order and their total `sum local_cd * upper_cd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// One row per base element.
    pub rows: Vec<DecompositionRow>,
    /// Sum over rows; equals the cd-index of the subdivision.
    pub total: CdPolynomial,
}

/// Decomposes the cd-index of the source over the elements of the target.
///
/// Requires a validated strong Eulerian map between Eulerian posets. The row of the top is
/// computed and must vanish; the total must equal the cd-index of the source.
pub fn decompose_cd(m: &SubdivisionMap) -> Result<Decomposition> {
    m.require_strong_eulerian()?;
    if !is_eulerian(m.source())? || !is_eulerian(m.target())? {
        return Err(Error::NotEulerian);
    }
    let t = m.target();
    let (_, top, _) = t.bounded_rank()?;
    let rows = (0..t.len())
        .into_par_iter()
        .map(|sigma| {
            let local_cd = local_index(&m.face_hat(sigma))?.cd;
            let upper_cd = if sigma == top {
                if !local_cd.is_zero() {
                    return Err(Error::IdentityViolated(format!("local cd-index of the top is {local_cd}, not 0")));
                }
                CdPolynomial::one()
            } else {
                cd_index(&t.interval(sigma, top)?)?
            };
            Ok(DecompositionRow { sigma: t.id(sigma).to_string(), rank: t.rank_of(sigma), local_cd, upper_cd })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = CdPolynomial::zero();
    for row in &rows {
        total += &(&row.local_cd * &row.upper_cd);
    }
    let direct = cd_index(m.source())?;
    if total != direct {
        return Err(Error::IdentityViolated(format!("decomposition total {total} differs from cd-index {direct}")));
    }
    Ok(Decomposition { rows, total })
}
