//! Per-`k` consistency sweeps. Each returns the list of failures found
//! (empty means the sweep passed) so callers can fan out over `k` freely.

use num_bigint::BigInt;

use crate::apex::{build_line_graph, predicted_cycles, totient_sum};
use crate::band::{build_integer_matrix, BandMatrixSpec};
use crate::graph::{
    build_edges, class_length, classify_edge, contiguous_translate_base, cycle_count, decompose,
    period, GraphSpec,
};
use crate::identities::check_tuple;
use crate::predictions::special_case_predictions;
use crate::rank::{nullity_fraction_free, nullity_mod_p, smallest_admissible_prime};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MethodsOptions {
    /// Also run the fraction-free rank route.
    pub fraction_free: bool,
}

impl Default for MethodsOptions {
    fn default() -> Self {
        MethodsOptions {
            fraction_free: true,
        }
    }
}

fn graph_nullity(n: i64, k: u64) -> u64 {
    cycle_count(&GraphSpec::from_i64(n, k).expect("k >= 1"))
}

/// Graph and closed form over `n in [0, k^2+k)`, plus both rank routes on
/// `n in (k, k^2+k]`.
pub fn check_methods(k: u64, opts: MethodsOptions) -> Vec<String> {
    let mut failures = Vec::new();
    let lg = match build_line_graph(k) {
        Ok(lg) => lg,
        Err(e) => return vec![format!("k={k}: {e}")],
    };
    let p = period(k);
    for n in 0..p {
        let g = graph_nullity(n as i64, k);
        let c = lg.nullity_at(n);
        if g != c {
            failures.push(format!("k={k} n={n}: graph {g} != closed {c}"));
        }
    }
    let field = smallest_admissible_prime(k).expect("k >= 1");
    for n in k + 1..=p {
        let g = graph_nullity(n as i64, k);
        let m = match build_integer_matrix(BandMatrixSpec { n, k }) {
            Ok(m) => m,
            Err(e) => {
                failures.push(format!("k={k} n={n}: {e}"));
                continue;
            }
        };
        let r = nullity_mod_p(&m, &field).nullity as u64;
        if r != g {
            failures.push(format!(
                "k={k} n={n}: graph {g} != rank mod {} {r}",
                field.p()
            ));
        }
        if opts.fraction_free {
            let f = nullity_fraction_free(&m).nullity as u64;
            if f != g {
                failures.push(format!("k={k} n={n}: graph {g} != fraction-free rank {f}"));
            }
        }
    }
    failures
}

pub fn check_special_cases(k: u64) -> Vec<String> {
    special_case_predictions(k)
        .into_iter()
        .filter_map(|p| {
            let got = graph_nullity(p.n, k);
            (got != p.nullity).then(|| {
                format!(
                    "k={k} n={}: {:?} predicts {}, graph gives {got}",
                    p.n, p.family, p.nullity
                )
            })
        })
        .collect()
}

/// Structural properties of every `G(n,k)` in one period, the apex table,
/// and the residue counting identities for `q = k`.
pub fn check_lemmas(k: u64) -> Vec<String> {
    let mut failures = Vec::new();
    let p = period(k) as i64;
    let kk = k as i64;
    for n in 0..p {
        let spec = GraphSpec::from_i64(n, k).expect("k >= 1");
        let d = decompose(&spec);
        let here = d.cycle_count() as i64;
        let next = graph_nullity(n + 1, k) as i64;
        if (next - here).abs() != 1 {
            failures.push(format!("k={k} n={n}: step {here} -> {next}"));
        }
        let mirrored = graph_nullity(kk * kk - kk - n, k) as i64;
        if mirrored != here {
            failures.push(format!(
                "k={k} n={n}: mirror gives {mirrored}, expected {here}"
            ));
        }
        let edges: usize = d.tail_length() + d.cycles.iter().map(Vec::len).sum::<usize>();
        if edges != k as usize {
            failures.push(format!("k={k} n={n}: {edges} edges accounted for"));
        }
        if *d.tail.last().unwrap() != spec.terminal() || d.tail[0] != k {
            failures.push(format!("k={k} n={n}: tail endpoints wrong"));
        }
        let no_cycles = d.in_tail(0) && d.in_tail(k - 1);
        if no_cycles != d.cycles.is_empty() {
            failures.push(format!("k={k} n={n}: tail criterion fails"));
        }
        if !d.cycles.is_empty() {
            let len = d.cycles[0].len();
            if d.cycles.iter().any(|c| c.len() != len) {
                failures.push(format!("k={k} n={n}: unequal cycle lengths"));
            }
            if contiguous_translate_base(&d).is_none() {
                failures.push(format!("k={k} n={n}: cycles are not contiguous translates"));
            }
        }
        for e in build_edges(&spec) {
            let c = classify_edge(&e, &spec);
            if c.length != class_length(c.class, &spec) {
                failures.push(format!("k={k} n={n}: edge {e:?} has length {}", c.length));
            }
        }
    }

    match build_line_graph(k) {
        Ok(lg) => {
            if lg.apexes().len() as u64 != totient_sum(k) {
                failures.push(format!("k={k}: {} apexes", lg.apexes().len()));
            }
            for a in lg.apexes() {
                let d = decompose(&GraphSpec::from_i64(a.eta as i64, k).unwrap());
                if d.cycle_count() as u64 != a.height
                    || d.cycles.iter().any(|c| c.len() as u64 != a.params.q)
                {
                    failures.push(format!("k={k}: apex at {} has wrong cycles", a.eta));
                } else if predicted_cycles(a) != d.cycles {
                    failures.push(format!("k={k}: apex at {} predicts other cycles", a.eta));
                }
            }
        }
        Err(e) => failures.push(format!("k={k}: {e}")),
    }

    let q = k;
    for m in 1..=q {
        for j in 1..=q {
            for y in 1..=q {
                if let Err(name) = check_tuple(m, j, q, y) {
                    failures.push(format!("{name} fails at M={m} j={j} q={q} y={y}"));
                }
            }
        }
    }
    failures
}

/// Graph-method nullity for a decimal `n`, for callers holding strings.
pub fn graph_nullity_big(n: &BigInt, k: u64) -> crate::error::Result<u64> {
    Ok(cycle_count(&GraphSpec::new(n, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_pass_for_small_k() {
        for k in 1..=6 {
            assert!(check_methods(k, MethodsOptions::default()).is_empty());
            assert!(check_special_cases(k).is_empty());
            assert!(check_lemmas(k).is_empty());
        }
    }
}
