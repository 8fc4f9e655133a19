//! The κ / μ̄ / β / d̲ table for `±Σ(2,3,12n±1)`, `±Σ(2,3,12n±5)`, with μ̄
//! recomputed from plumbings and checked against the dataset.

use serde::Serialize;

use crate::dataset::{Dataset, Family};
use crate::{spin, Error, Execution, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub family: Family,
    pub orientation: i8,
    /// e.g. `-sigma(2,3,7)`.
    pub manifold: String,
    #[serde(with = "crate::rational")]
    pub mubar: Rational,
    #[serde(with = "crate::rational")]
    pub kappa: Rational,
    #[serde(with = "crate::rational")]
    pub beta: Rational,
    #[serde(with = "crate::rational")]
    pub d_underline: Rational,
    pub kg_split: bool,
}

fn row(n: u32, family: Family, orientation: i8, ds: &Dataset) -> Result<TableRow> {
    let si = family.seifert(n, orientation)?;
    let (_, mubar) = spin::mubar_at(&si, 0)?;
    let published = ds.get(family, orientation);
    let sign = if orientation < 0 { "-" } else { "" };
    let manifold = format!("{sign}sigma(2,3,{})", family.third_multiplicity(n));
    if mubar != published.mubar {
        return Err(Error::TableMismatch {
            row: manifold,
            computed: mubar.to_string(),
            published: published.mubar.to_string(),
        });
    }
    Ok(TableRow {
        n,
        family,
        orientation,
        manifold,
        mubar,
        kappa: published.kappa,
        beta: published.beta,
        d_underline: published.d_underline,
        kg_split: published.kg_split,
    })
}

/// Eight rows per `n` in `1..=n_max`, grouped by `n` in table order.
pub fn compute_table(n_max: u32, ds: &Dataset, exec: Execution) -> Result<Vec<TableRow>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("--n-max must be at least 1".into()));
    }
    let jobs: Vec<(u32, Family, i8)> = (1..=n_max)
        .flat_map(|n| {
            Family::ALL
                .into_iter()
                .flat_map(move |f| [(n, f, 1i8), (n, f, -1i8)])
        })
        .collect();
    exec.map(jobs, |(n, f, o)| row(n, f, o, ds)).into_iter().collect()
}
