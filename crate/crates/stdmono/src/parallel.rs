//! Parallel versions of the rank computations: row-content groups are
//! independent, so they are eliminated concurrently and the pivots merged.

use rayon::prelude::*;
use stdmono_core::exactalg::Monomial;
use stdmono_core::sections::{class_groups, group_pivots, DimCertificate, Realization};
use stdmono_core::tableaux::{enumerate_straight, Shape, Side};

/// Same output as `sections::span_pivots`, for any thread count.
pub fn span_pivots(shape: &Shape, side: Side) -> Vec<Monomial> {
    let n = shape.n();
    let groups = class_groups(shape);
    let mut out: Vec<Monomial> = groups
        .into_par_iter()
        .flat_map_iter(|g| {
            let g = match side {
                Side::Primal => g,
                Side::Opposite => g
                    .into_iter()
                    .map(|rows| {
                        rows.into_iter()
                            .map(|mut r| {
                                r.set = r.set.tilde(n);
                                r
                            })
                            .collect()
                    })
                    .collect(),
            };
            group_pivots(shape, side, Realization::Triangular, &g)
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn dim_sections(shape: &Shape) -> DimCertificate {
    let (rank, straight) = rayon::join(|| span_pivots(shape, Side::Primal).len(), || enumerate_straight(shape).len());
    DimCertificate {
        shape: shape.clone(),
        generator_count: shape.tableau_count(),
        class_count: shape.class_count(),
        straight_count: straight,
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_sequential_route() {
        for m in [vec![1u32, 1, 1], vec![2, 0, 1], vec![0, 2, 2]] {
            let shape = Shape::ambient(3, m).unwrap();
            for side in [Side::Primal, Side::Opposite] {
                assert_eq!(span_pivots(&shape, side), stdmono_core::sections::span_pivots(&shape, side, Realization::Triangular));
            }
            assert_eq!(dim_sections(&shape), stdmono_core::sections::dim_sections(&shape));
        }
    }
}
