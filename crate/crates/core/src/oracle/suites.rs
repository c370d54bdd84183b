//! Seeded property suites. Each trial draws its input from `(seed, index)`
//! alone, so reports are reproducible byte-for-byte whatever the thread
//! count.

use std::fmt::Display;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::brute::brute_force_det;
use super::sample::{trial_rng, Sampler};
use crate::bilinear::{check_decomposition, decompose, gs0_rhs, gs_step, isotropic_strip, BilinearForm};
use crate::det::{det, det_assignment, det_value};
use crate::dual::{double_dual_matrix, dual_base, dual_eval_matrix, dual_rank, is_ghost_monic, MonicVerdict};
use crate::error::{Error, Result};
use crate::format::to_inline;
use crate::matrix::Matrix;
use crate::quadratic::{form_from_q, hyperbolic_plane, is_hyperbolic_plane, orthogonal_sum, QuadraticForm};
use crate::scalar::{GroupValue, Scalar};
use crate::vector::Vector;

/// Registered suite names.
pub const SUITES: &[&str] = &[
    "frobenius",
    "quasi-identity",
    "det-engines",
    "dual-base",
    "double-dual",
    "gram-schmidt",
    "cs1",
    "cs-gram",
    "quadlin",
    "degen",
    "decompose",
    "surpass-order",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Counterexample,
    Proved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: u64,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub suite: String,
    pub trials: u64,
    pub seed: u64,
    pub verdict: Verdict,
    pub failures: Vec<Failure>,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Counterexample
    }
}

/// A failed check inside one trial.
struct Fail {
    input: String,
    expected: String,
    got: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail {
            input: String::new(),
            expected: "no error".into(),
            got: e.to_string(),
        }
    }
}

type Trial = std::result::Result<(), Fail>;

fn ensure(ok: bool, input: impl Display, expected: impl Display, got: impl Display) -> Trial {
    if ok {
        Ok(())
    } else {
        Err(Fail {
            input: input.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        })
    }
}

pub fn run_suite(name: &str, trials: u64, seed: u64) -> Result<TrialReport> {
    let body: fn(&mut ChaCha8Rng, u64) -> Trial = match name {
        "frobenius" => frobenius,
        "quasi-identity" => quasi_identity,
        "det-engines" => det_engines,
        "dual-base" => dual_base_suite,
        "double-dual" => double_dual,
        "gram-schmidt" => gram_schmidt_suite,
        "cs1" => cs1,
        "cs-gram" => cs_gram,
        "quadlin" => quadlin,
        "degen" => degen,
        "decompose" => decompose_suite,
        "surpass-order" => surpass_order,
        other => {
            return Err(Error::Parse(format!(
                "unknown suite `{other}`; known suites: {}",
                SUITES.join(", ")
            )))
        }
    };
    let failures = run_trials(trials, seed, body);
    Ok(TrialReport {
        suite: name.to_string(),
        trials,
        seed,
        verdict: if failures.is_empty() { Verdict::Pass } else { Verdict::Counterexample },
        failures,
    })
}

fn run_trials(trials: u64, seed: u64, body: fn(&mut ChaCha8Rng, u64) -> Trial) -> Vec<Failure> {
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(trials.max(1) as usize) as u64;
    let mut failures: Vec<Failure> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut local = Vec::new();
                    let mut index = w;
                    while index < trials {
                        if let Err(f) = body(&mut trial_rng(seed, index), index) {
                            local.push(Failure {
                                index,
                                input: f.input,
                                expected: f.expected,
                                got: f.got,
                            });
                        }
                        index += workers;
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("trial worker panicked"))
            .collect()
    });
    failures.sort_by_key(|f| f.index);
    failures
}

fn size(index: u64, from: usize, count: u64) -> usize {
    from + (index % count) as usize
}

fn int(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> GroupValue {
    GroupValue::from_int(rng.gen_range(lo..=hi))
}

fn nu_int(x: Scalar) -> i64 {
    let q = x.nu_value().expect("nonzero").rational();
    (q.floor()).to_integer() as i64
}

/// Symmetric pattern with, now and then, one side of an off-diagonal pair
/// replaced by its ghost, which keeps the form supertropically symmetric.
fn st_symmetric_gram(s: &Sampler, rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut g = s.symmetric_gram(rng, n);
    for i in 0..n {
        for j in i + 1..n {
            if g.get(i, j).is_tangible() && rng.gen_bool(0.3) {
                let (a, b) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
                g.set(a, b, g.get(a, b).nu());
            }
        }
    }
    g
}

fn mat(a: &Matrix) -> String {
    format!("[{}]", to_inline(a))
}

fn frobenius(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let s = Sampler::default();
    let (a, b) = (s.scalar(rng), s.scalar(rng));
    let m = 1 + (index % 5) as i64;
    let lhs = (a + b).powi(m)?;
    let rhs = a.powi(m)? + b.powi(m)?;
    ensure(lhs == rhs, format!("a={a}, b={b}, m={m}"), format!("(a+b)^m = {rhs}"), lhs)
}

fn quasi_identity(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let n = size(index, 1, 5);
    let a = Sampler::default().nonsingular(rng, n)?;
    let input = format!("A={}", mat(&a));
    let (i_a, i_a2) = a.quasi_identities()?;
    ensure(i_a.is_quasi_identity()?, &input, "I_A is a quasi-identity", mat(&i_a))?;
    ensure(i_a2.is_quasi_identity()?, &input, "I'_A is a quasi-identity", mat(&i_a2))?;
    let sq = i_a.mul(&i_a)?;
    ensure(sq == i_a, &input, format!("I_A^2 = {}", mat(&i_a)), mat(&sq))?;
    let d = det_value(&i_a)?;
    ensure(d == Scalar::ONE, &input, "|I_A| = 0", d)?;
    ensure(
        i_a.ghost_surpasses(&Matrix::identity(n)),
        &input,
        "I_A ghost-surpasses Id",
        mat(&i_a),
    )
}

fn det_engines(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let n = size(index, 2, 5);
    let a = Sampler::default().matrix(rng, n, n);
    let input = format!("A={}", mat(&a));
    let brute = brute_force_det(&a)?;
    let expand = det(&a)?;
    let assign = det_assignment(&a)?;
    ensure(expand.value == brute.value, &input, format!("det = {}", brute.value), expand.value)?;
    ensure(assign.value == brute.value, &input, format!("det_assignment = {}", brute.value), assign.value)?;
    let mut w = expand.witnesses.clone();
    w.sort();
    ensure(
        w == brute.witnesses,
        &input,
        format!("expansion witnesses {:?}", brute.witnesses),
        format!("{w:?}"),
    )?;
    ensure(
        assign.witnesses.iter().all(|s| brute.witnesses.contains(s)),
        &input,
        "assignment witnesses among the optimal permutations",
        format!("{:?}", assign.witnesses),
    )?;
    ensure(
        (assign.witnesses.len() > 1) == (brute.witnesses.len() > 1),
        &input,
        format!("tie detected = {}", brute.witnesses.len() > 1),
        format!("{} assignment witnesses", assign.witnesses.len()),
    )?;
    let explained = brute.witnesses.len() > 1 || brute.has_ghost_factor(&a);
    ensure(
        brute.value.is_ghost() == explained,
        &input,
        "ghost value iff tie or ghost factor",
        brute.value,
    )
}

fn closed_base(rng: &mut ChaCha8Rng, index: u64) -> Result<Matrix> {
    Sampler::default().closed_base(rng, size(index, 1, 5))
}

fn grid_pattern_ok(g: &Matrix) -> bool {
    (0..g.rows()).all(|i| {
        (0..g.cols()).all(|j| {
            if i == j {
                g.get(i, j) == Scalar::ONE
            } else {
                g.get(i, j).is_ghost_or_zero()
            }
        })
    })
}

fn dual_base_suite(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let a = closed_base(rng, index)?;
    let input = format!("A={}", mat(&a));
    let d = dual_base(&a)?;
    let grid = dual_eval_matrix(&d)?;
    ensure(grid_pattern_ok(&grid), &input, "ε_i(b_j): diagonal 0, off-diagonal in G0", mat(&grid))?;
    let r = dual_rank(&d)?;
    ensure(r == a.rows(), &input, format!("dual rank {}", a.rows()), r)
}

fn double_dual(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let a = closed_base(rng, index)?;
    let input = format!("A={}", mat(&a));
    let d = dual_base(&a)?;
    let phi = double_dual_matrix(&d)?;
    let grid = dual_eval_matrix(&d)?;
    ensure(phi == grid && grid_pattern_ok(&phi), &input, format!("Φ = {}", mat(&grid)), mat(&phi))?;
    let r = phi.rank()?;
    ensure(r == a.rows(), &input, format!("rank Φ = {}", a.rows()), r)?;
    let verdict = is_ghost_monic(&phi, 0, 0)?;
    ensure(verdict == MonicVerdict::Proved, &input, "Φ ghost-monic (proved)", format!("{verdict:?}"))
}

/// Gram matrix whose first `k` standard vectors are nonisotropic, pairwise
/// g-orthogonal and weakly Cauchy-Schwartz.
fn gs_gram(s: &Sampler, rng: &mut ChaCha8Rng, n: usize, k: usize) -> Matrix {
    let mut g = st_symmetric_gram(s, rng, n);
    for i in 0..k {
        g.set(i, i, s.tangible(rng));
    }
    for i in 0..k {
        for j in i + 1..k {
            let x = if rng.gen_bool(s.zero_density) {
                Scalar::Zero
            } else {
                let top = (nu_int(g.get(i, i)) + nu_int(g.get(j, j))).div_euclid(2);
                Scalar::Ghost(int(rng, top - 20, top))
            };
            g.set(i, j, x);
            g.set(j, i, x);
        }
    }
    g
}

fn gram_schmidt_suite(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let s = Sampler::default();
    let n = size(index, 2, 4);
    let k = 1 + ((index / 4) % (n as u64 - 1)) as usize;
    let gram = gs_gram(&s, rng, n, k);
    let v = s.vector(rng, n);
    let form = BilinearForm::new(gram.clone())?;
    let base: Vec<Vector> = (0..k).map(|i| Vector::unit(n, i)).collect();
    let input = format!("G={}, k={k}, v=({v})", mat(&gram));
    let r = gs_step(&form, &base, &v)?;
    for (j, b) in base.iter().enumerate() {
        let left = form.eval(&r.corrected, b)?;
        let right = form.eval(b, &r.corrected)?;
        ensure(
            left.is_ghost_or_zero() && right.is_ghost_or_zero(),
            &input,
            format!("v' g-orthogonal to b_{j}"),
            format!("⟨v',b⟩ = {left}, ⟨b,v'⟩ = {right}"),
        )?;
    }
    let lhs = form.norm(&r.corrected)?;
    let rhs = gs0_rhs(&form, &base, &v)?;
    ensure(lhs == rhs, &input, format!("⟨v',v'⟩ = {rhs}"), lhs)
}

/// 2×2 check: `⟨v,w⟩⟨w,v⟩ ⊨ ⟨v,v⟩⟨w,w⟩` exactly when the Gram determinant
/// lies in `G₀`.
fn cs_gram(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let s = Sampler::default();
    let mut g = Matrix::identity(2);
    g.set(0, 0, s.tangible(rng));
    g.set(1, 1, s.tangible(rng));
    let x = s.scalar(rng);
    g.set(0, 1, x);
    g.set(1, 0, x);
    if x.is_tangible() && index.is_multiple_of(3) {
        g.set(1, 0, x.nu());
    }
    let form = BilinearForm::new(g.clone())?;
    let (v, w) = (Vector::unit(2, 0), Vector::unit(2, 1));
    let lhs = (form.eval(&v, &w)? * form.eval(&w, &v)?).ghost_surpasses(form.norm(&v)? * form.norm(&w)?);
    let rhs = form.gram_dependent(&[v, w])?.dependent;
    ensure(
        lhs == rhs,
        format!("G={}", mat(&g)),
        format!("⟨v,w⟩⟨w,v⟩ ⊨ ⟨v,v⟩⟨w,w⟩ is {rhs}, matching |G| in G0"),
        lhs,
    )
}

/// Gram matrix whose standard base is pairwise Cauchy-Schwartz.
fn cs_base_gram(s: &Sampler, rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut g = Matrix::identity(n);
    for i in 0..n {
        g.set(i, i, s.tangible(rng));
    }
    for i in 0..n {
        for j in i + 1..n {
            let x = if rng.gen_bool(s.zero_density) {
                Scalar::Zero
            } else {
                let sum = nu_int(g.get(i, i)) + nu_int(g.get(j, j));
                let top = (sum + 1).div_euclid(2) - 1;
                let value = int(rng, top - 20, top);
                if rng.gen_bool(s.ghost_density) {
                    Scalar::Ghost(value)
                } else {
                    Scalar::Tangible(value)
                }
            };
            g.set(i, j, x);
            g.set(j, i, x);
        }
    }
    g
}

fn cs1(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let s = Sampler::default();
    let n = size(index, 2, 4);
    let gram = cs_base_gram(&s, rng, n);
    let form = BilinearForm::new(gram.clone())?;
    let draw = |rng: &mut ChaCha8Rng| loop {
        let v = Vector::new((0..n).map(|_| s.tangible_or_zero(rng)).collect());
        if v.is_tangible() {
            return v;
        }
    };
    let (v, w) = (draw(rng), draw(rng));
    let p = form.pair_class(&v, &w)?;
    ensure(
        p.weakly_cauchy_schwartz,
        format!("G={}, v=({v}), w=({w})", mat(&gram)),
        "weakly Cauchy-Schwartz pair",
        format!("{p:?}"),
    )
}

fn degen(rng: &mut ChaCha8Rng, _index: u64) -> Trial {
    let s = Sampler::default();
    for _ in 0..s.max_retries {
        let gram = st_symmetric_gram(&s, rng, 2);
        let p = s.nonsingular(rng, 2)?;
        let (v1, v2) = (p.column(0), p.column(1));
        let form = BilinearForm::new(gram.clone())?;
        if !det_value(&form.gram_of(&[v1.clone(), v2.clone()])?)?.is_tangible() {
            continue;
        }
        let input = format!("G={}, v1=({v1}), v2=({v2})", mat(&gram));
        let strip = isotropic_strip(&form, &v1, &v2)?;
        let samples = strip.samples();
        ensure(!samples.is_empty(), &input, "nonempty strip", format!("{strip:?}"))?;
        for beta in samples {
            let w = v1.add(&v2.scale(Scalar::Tangible(beta)))?;
            let q = form.norm(&w)?;
            ensure(q.is_ghost_or_zero(), &input, format!("⟨w,w⟩ in G0 at β = {beta}"), q)?;
        }
        return Ok(());
    }
    Err(Error::Domain("no nondegenerate plane sampled".into()).into())
}

fn decompose_suite(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let s = Sampler::default();
    let n = size(index, 1, 5);
    let gram = st_symmetric_gram(&s, rng, n);
    let base = s.nonsingular(rng, n)?.columns();
    let form = BilinearForm::new(gram.clone())?;
    let d = decompose(&form, &base)?;
    let problems = check_decomposition(&form, &base, &d)?;
    ensure(
        problems.is_empty(),
        format!("G={}, base={}", mat(&gram), mat(&Matrix::from_columns(&base)?)),
        "all decomposition postconditions",
        problems.join("; "),
    )
}

fn quadlin(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let s = Sampler::default();
    let n = size(index, 1, 5);
    let values: Vec<Scalar> = (0..n).map(|_| s.scalar(rng)).collect();
    let q = QuadraticForm::diagonal(values.clone())?;
    let input = format!("q=({})", Vector::new(values.clone()));
    let b = form_from_q(&q)?;
    ensure(b.is_supertropically_symmetric(), &input, "B_Q supertropically symmetric", mat(b.gram()))?;
    for _ in 0..20 {
        let (v, w) = (s.vector(rng, n), s.vector(rng, n));
        let lhs = b.eval(&v, &w)?.square();
        let rhs = q.eval(&v)? * q.eval(&w)?;
        let pair = format!("{input}, v=({v}), w=({w})");
        ensure(lhs == rhs, &pair, format!("B_Q(v,w)^2 = {rhs}"), lhs)?;
        ensure(b.norm(&v)? == q.eval(&v)?, &pair, "B_Q(v,v) = Q(v)", b.norm(&v)?)?;
        ensure(b.pair_class(&v, &w)?.weakly_cauchy_schwartz, &pair, "weakly Cauchy-Schwartz", "violated")?;
    }

    let a = s.tangible(rng);
    let (e1, e2) = (Vector::unit(2, 0), Vector::unit(2, 1));
    ensure(
        is_hyperbolic_plane(&hyperbolic_plane(a)?, &e1, &e2)?,
        format!("a={a}"),
        "hyperbolic plane",
        "not hyperbolic",
    )?;

    let extra: Vec<Scalar> = (0..1 + index % 3).map(|_| s.scalar(rng)).collect();
    let q2 = QuadraticForm::diagonal(extra.clone())?;
    let g1 = BilinearForm::new(st_symmetric_gram(&s, rng, n))?;
    let g2 = BilinearForm::new(s.matrix(rng, extra.len(), extra.len()))?;
    for (x, y) in [
        (q.clone(), q2),
        (QuadraticForm::from_form(g1), QuadraticForm::from_form(g2)),
    ] {
        let sum = orthogonal_sum(&x, &y)?;
        let (v1, v2) = (s.vector(rng, x.dim()), s.vector(rng, y.dim()));
        let joined = Vector::new(v1.iter().chain(v2.iter()).copied().collect());
        let lhs = sum.eval(&joined)?;
        let rhs = x.eval(&v1)? + y.eval(&v2)?;
        ensure(
            lhs == rhs,
            format!("{x:?} ⊕ {y:?} at ({v1}) ⊕ ({v2})"),
            format!("Q1(v1)+Q2(v2) = {rhs}"),
            lhs,
        )?;
    }
    Ok(())
}

fn surpass_order(rng: &mut ChaCha8Rng, index: u64) -> Trial {
    let narrow = Sampler {
        lo: -2,
        hi: 2,
        ghost_density: 0.4,
        ..Sampler::default()
    };
    let (a, b, c) = (narrow.scalar(rng), narrow.scalar(rng), narrow.scalar(rng));
    let input = format!("a={a}, b={b}, c={c}");
    ensure(a.ghost_surpasses(a), &input, "a ⊨ a", "false")?;
    if a.ghost_surpasses(b) && b.ghost_surpasses(c) {
        ensure(a.ghost_surpasses(c), &input, "a ⊨ c by transitivity", "false")?;
    }
    if a.ghost_surpasses(b) && b.ghost_surpasses(a) {
        ensure(a == b, &input, "a = b by antisymmetry", "a != b")?;
    }
    let n = size(index, 2, 3);
    let x = narrow.matrix(rng, n, n);
    let y = narrow.matrix(rng, n, n);
    let lhs = det_value(&x.mul(&y)?)?;
    let rhs = det_value(&x)? * det_value(&y)?;
    ensure(
        lhs.ghost_surpasses(rhs),
        format!("A={}, B={}", mat(&x), mat(&y)),
        format!("|AB| ⊨ |A||B| = {rhs}"),
        lhs,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_a_short_run() {
        for name in SUITES {
            let r = run_suite(name, 40, 7).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.failures.first());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = serde_json::to_string(&run_suite("det-engines", 30, 3).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite("det-engines", 30, 3).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", 1, 0).unwrap_err().is_parse());
    }
}
