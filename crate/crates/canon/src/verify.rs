//! Machine verification of the named identities, each recomputing both
//! sides independently (enumeration versus closed form) and reporting a
//! coefficient-level witness on failure.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::bijection::{
    des_global_involution, des_involution, drop_top_descent_path, lalanne_kreweras, lk_rho, rho,
    rho_inv, to_identity_class, wdes_global_involution, wdes_involution,
};
use crate::enumerate::{
    catalan, dyck_paths, factorial, multinomial_count, multiset_permutations, nonnesting,
    permutations, Cap,
};
use crate::error::{Error, Result};
use crate::families::{
    class_distribution, eulerian, narayana, narayana_closed, nonnesting_distribution,
};
use crate::general::{
    avoider_distribution, avoider_distribution_closed, avoiders, canon_class,
    canon_class_distribution, is_avoider, is_canon, is_nonnesting_partition,
    nonnesting_partition_count, nonnesting_partition_distribution, nonnesting_partitions,
};
use crate::poly::BivariatePoly;
use crate::word::Permutation;

/// Outcome of one identity check at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub params: String,
    pub pass: bool,
    /// First coefficient or word where the two sides differ, when failing.
    pub witness: Option<String>,
    /// Extra pass-side output, e.g. the verified polynomial.
    pub detail: Option<String>,
    pub millis: u128,
}

/// Identity names accepted by [`check_identity`].
pub const IDENTITIES: &[&str] = &[
    "main",
    "refined",
    "eq6",
    "eq7",
    "eq12",
    "eq13",
    "cor23",
    "cor24",
    "cor25",
    "cor26",
    "crev",
    "thm51",
    "acount",
    "b_count",
    "eq34",
    "b_asymmetry",
    "count",
    "inclusions",
    "involutions",
];

/// Parameters for a verification run. `k` defaults to 3 where a copy count
/// is needed; `sigma` restricts per-class identities to a single class.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub k: Option<usize>,
    pub sigma: Option<Permutation>,
    pub cap: Cap,
}

struct Outcome {
    pass: bool,
    witness: Option<String>,
    detail: Option<String>,
}

impl Outcome {
    fn pass(detail: Option<String>) -> Self {
        Outcome { pass: true, witness: None, detail }
    }

    fn fail(witness: String) -> Self {
        Outcome { pass: false, witness: Some(witness), detail: None }
    }
}

fn compare(lhs: &BivariatePoly, rhs: &BivariatePoly, detail: Option<String>) -> Outcome {
    match lhs.first_difference(rhs) {
        None => Outcome::pass(detail),
        Some(((i, j), a, b)) => Outcome::fail(format!(
            "coefficient of t^{i}u^{j}: {a} vs {b}"
        )),
    }
}

/// Checks the named identity at size `n`, returning a structured report.
pub fn check_identity(name: &str, n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let k = opts.k.unwrap_or(3);
    let mut params = format!("n={n}");
    if needs_k(name) {
        params = format!("n={n} k={k}");
    }
    if let Some(sigma) = &opts.sigma {
        params = format!("{params} sigma={sigma}");
    }
    let outcome = match name {
        "main" => main_theorem(n, opts)?,
        "refined" => refined_theorem(n, opts)?,
        "eq6" => eq6(n),
        "eq7" => eq7(n),
        "eq12" => eq12(n)?,
        "eq13" => eq13(n)?,
        "cor23" => cor23(n, opts)?,
        "cor24" => cor24(n, opts)?,
        "cor25" => cor25(n, opts)?,
        "cor26" => cor26(n, opts)?,
        "crev" => crev(n, opts)?,
        "thm51" => thm51(n, k, opts)?,
        "acount" => acount(n, k, opts)?,
        "b_count" => b_count(n, k, opts)?,
        "eq34" => eq34(n, k, opts)?,
        "b_asymmetry" => b_asymmetry(n, k, opts)?,
        "count" => count_nonnesting(n, opts)?,
        "inclusions" => inclusions(n, k, opts)?,
        "involutions" => involutions(n, opts)?,
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };
    Ok(VerificationReport {
        identity: name.to_string(),
        params,
        pass: outcome.pass,
        witness: outcome.witness,
        detail: outcome.detail,
        millis: start.elapsed().as_millis(),
    })
}

fn needs_k(name: &str) -> bool {
    matches!(
        name,
        "thm51" | "acount" | "b_count" | "eq34" | "b_asymmetry" | "inclusions"
    )
}

fn ensure_class_work(n: usize, cap: Cap) -> Result<()> {
    cap.ensure(&(factorial(n) * catalan(n)))
}

fn main_theorem(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    ensure_class_work(n, opts.cap)?;
    let lhs = nonnesting_distribution(n);
    let rhs = &eulerian(n) * &narayana(n);
    Ok(compare(&lhs, &rhs, Some(lhs.to_string())))
}

fn refined_theorem(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    ensure_class_work(n, opts.cap)?;
    let nar = narayana(n);
    let classes: Vec<Permutation> = match &opts.sigma {
        Some(sigma) => vec![sigma.clone()],
        None => permutations(n).collect(),
    };
    for sigma in classes {
        let lhs = class_distribution(&sigma);
        let rhs = nar.mul_term(&BigInt::one(), sigma.statistics().des as u32, 0);
        if let Some(((i, j), a, b)) = lhs.first_difference(&rhs) {
            return Ok(Outcome::fail(format!(
                "sigma={sigma}: coefficient of t^{i}u^{j}: {a} vs {b}"
            )));
        }
    }
    Ok(Outcome::pass(None))
}

fn eq6(n: usize) -> Outcome {
    let nar = narayana(n);
    let lhs = nar.substitute_u_one().mul_term(&BigInt::one(), 1, 0);
    let rhs = nar.substitute_u_for_t();
    compare(&lhs, &rhs, None)
}

fn eq7(n: usize) -> Outcome {
    let lhs = narayana_closed(n);
    let rhs = narayana(n).substitute_u_for_t();
    compare(&lhs, &rhs, Some(lhs.to_string()))
}

fn eq12(n: usize) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Unsupported("eq12 requires n >= 1".into()));
    }
    let diag = narayana(n).substitute_u_for_t();
    let rhs = diag.reversed_in_t(n as u32 + 1)?;
    Ok(compare(&diag, &rhs, None))
}

fn eq13(n: usize) -> Result<Outcome> {
    let nar = narayana(n);
    let rhs = nar.reversed_in_t_u(n as u32)?;
    Ok(compare(&nar, &rhs, None))
}

fn cor23(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    ensure_class_work(n, opts.cap)?;
    let dist = nonnesting_distribution(n).substitute_u_for_t();
    let rhs = dist.reversed_in_t(2 * n as u32)?;
    Ok(compare(&dist, &rhs, None))
}

fn cor24(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Unsupported("cor24 requires n >= 1".into()));
    }
    ensure_class_work(n, opts.cap)?;
    let dist = nonnesting_distribution(n).substitute_u_one();
    let rhs = dist.reversed_in_t(2 * n as u32 - 2)?;
    Ok(compare(&dist, &rhs, None))
}

fn crev(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Unsupported("crev requires n >= 1".into()));
    }
    ensure_class_work(n, opts.cap)?;
    let dist = nonnesting_distribution(n);
    let rhs = dist.reversed_in_t_u(2 * n as u32 - 1)?;
    Ok(compare(&dist, &rhs, None))
}

fn per_class(
    n: usize,
    opts: &VerifyOptions,
    window: impl Fn(usize) -> u32,
    project: impl Fn(&BivariatePoly) -> BivariatePoly,
) -> Result<Outcome> {
    ensure_class_work(n, opts.cap)?;
    let classes: Vec<Permutation> = match &opts.sigma {
        Some(sigma) => vec![sigma.clone()],
        None => permutations(n).collect(),
    };
    for sigma in classes {
        let des = sigma.statistics().des;
        let poly = project(&class_distribution(&sigma));
        let rhs = poly.reversed_in_t(2 * des as u32 + window(n))?;
        if let Some(((i, j), a, b)) = poly.first_difference(&rhs) {
            return Ok(Outcome::fail(format!(
                "sigma={sigma}: coefficient of t^{i}u^{j}: {a} vs {b}"
            )));
        }
    }
    Ok(Outcome::pass(None))
}

/// Per-class weak-descent symmetry: the shifted statistic `wdes - des(sigma)`
/// is symmetric about `(n+1)/2`.
fn cor25(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    per_class(n, opts, |n| n as u32 + 1, |p| p.substitute_u_for_t())
}

/// Per-class descent symmetry: `des - des(sigma)` is symmetric about `(n-1)/2`.
fn cor26(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Unsupported("cor26 requires n >= 1".into()));
    }
    per_class(n, opts, |n| n as u32 - 1, |p| p.substitute_u_one())
}

fn ensure_avoider_work(n: usize, cap: Cap) -> Result<()> {
    let needed = BigUint::from(2u32).pow(n.max(1) as u32 - 1) * factorial(n);
    cap.ensure(&needed)
}

fn thm51(n: usize, k: usize, opts: &VerifyOptions) -> Result<Outcome> {
    ensure_avoider_work(n, opts.cap)?;
    let lhs = avoider_distribution(n, k);
    let rhs = avoider_distribution_closed(n, k)?;
    Ok(compare(&lhs, &rhs, Some(lhs.to_string())))
}

fn acount(n: usize, k: usize, opts: &VerifyOptions) -> Result<Outcome> {
    if k < 3 {
        return Err(Error::Unsupported("acount requires k >= 3".into()));
    }
    ensure_avoider_work(n, opts.cap)?;
    let found = BigUint::from(avoiders(n, k).len() as u64);
    let expected = BigUint::from(2u32).pow(n.max(1) as u32 - 1) * factorial(n);
    if found == expected {
        Ok(Outcome::pass(Some(format!("|A| = {found}"))))
    } else {
        Ok(Outcome::fail(format!("enumerated {found}, closed form {expected}")))
    }
}

fn b_count(n: usize, k: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let expected = nonnesting_partition_count(n, k);
    opts.cap.ensure(&expected)?;
    let found = BigUint::from(nonnesting_partitions(n, k).len() as u64);
    if found == expected {
        Ok(Outcome::pass(Some(format!("|B| = {found}"))))
    } else {
        Ok(Outcome::fail(format!("enumerated {found}, closed form {expected}")))
    }
}

fn eq34(n: usize, k: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let id_class = canon_class(&Permutation::identity(n), k);
    let class_size = BigUint::from(id_class.len() as u64);
    opts.cap.ensure(&(factorial(n) * class_size))?;
    let id_poly = crate::families::distribution(id_class);
    let classes: Vec<Permutation> = match &opts.sigma {
        Some(sigma) => vec![sigma.clone()],
        None => permutations(n).collect(),
    };
    for sigma in classes {
        let lhs = canon_class_distribution(&sigma, k);
        let rhs = id_poly.mul_term(&BigInt::one(), sigma.statistics().des as u32, 0);
        if let Some(((i, j), a, b)) = lhs.first_difference(&rhs) {
            return Ok(Outcome::fail(format!(
                "sigma={sigma}: coefficient of t^{i}u^{j}: {a} vs {b}"
            )));
        }
    }
    Ok(Outcome::pass(Some(format!("identity-class distribution = {id_poly}"))))
}

/// Negative check: passes when the descent distribution is NOT palindromic
/// within its own degree span.
fn b_asymmetry(n: usize, k: usize, opts: &VerifyOptions) -> Result<Outcome> {
    opts.cap.ensure(&nonnesting_partition_count(n, k))?;
    let dist = nonnesting_partition_distribution(n, k).substitute_u_one();
    let lo = dist.terms().map(|(&(i, _), _)| i).min().unwrap_or(0);
    let hi = dist.deg_t();
    let reversed = dist.reversed_in_t(lo + hi)?;
    match dist.first_difference(&reversed) {
        Some(((i, _), a, b)) => Ok(Outcome::pass(Some(format!(
            "asymmetric as expected: coefficient of t^{i} is {a}, mirror is {b}"
        )))),
        None => Ok(Outcome::fail(
            "distribution is palindromic, expected asymmetry".into(),
        )),
    }
}

fn count_nonnesting(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let product = factorial(n) * catalan(n);
    let closed = factorial(2 * n) / factorial(n + 1);
    if product != closed {
        return Ok(Outcome::fail(format!("n! Cat_n = {product} vs (2n)!/(n+1)! = {closed}")));
    }
    // Count the two factors by actual enumeration.
    let perms = permutations(n).count();
    let paths = dyck_paths(n).count();
    let enumerated = BigUint::from(perms as u64) * BigUint::from(paths as u64);
    if enumerated != product {
        return Ok(Outcome::fail(format!(
            "enumerated {perms} x {paths} = {enumerated}, closed form {product}"
        )));
    }
    // Where the full word space is small enough, also count by filtering it.
    if multinomial_count(n, 2) <= BigUint::from(opts.cap.0) {
        let filtered = multiset_permutations(n, 2)
            .filter(|w| w.is_nonnesting().unwrap())
            .count();
        if BigUint::from(filtered as u64) != product {
            return Ok(Outcome::fail(format!(
                "filtered count {filtered}, closed form {product}"
            )));
        }
    }
    Ok(Outcome::pass(Some(format!("|C| = {product}"))))
}

fn inclusions(n: usize, k: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let space = multinomial_count(n, k);
    opts.cap.ensure(&space)?;
    let mut counts = (0usize, 0usize, 0usize);
    for w in multiset_permutations(n, k) {
        let a = is_avoider(&w);
        let b = is_nonnesting_partition(&w);
        let c = is_canon(&w);
        if a && !b {
            return Ok(Outcome::fail(format!("{w} avoids the patterns but has nested arcs")));
        }
        if b && !c {
            return Ok(Outcome::fail(format!("{w} is arc-nonnesting but not canon")));
        }
        if k == 2 {
            let nn = w.is_nonnesting().unwrap();
            if a != nn || b != nn || c != nn {
                return Ok(Outcome::fail(format!(
                    "{w}: k=2 membership disagrees with the nonnesting predicate"
                )));
            }
        }
        counts.0 += usize::from(a);
        counts.1 += usize::from(b);
        counts.2 += usize::from(c);
    }
    if counts.0 != avoiders(n, k).len() || counts.1 != nonnesting_partitions(n, k).len() {
        return Ok(Outcome::fail(
            "filter counts disagree with backtracking enumeration".into(),
        ));
    }
    Ok(Outcome::pass(Some(format!(
        "|A| = {}, |B| = {}, |C| = {}",
        counts.0, counts.1, counts.2
    ))))
}

/// Exhaustive involution and statistic-contract battery at one size.
fn involutions(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Unsupported("involutions requires n >= 1".into()));
    }
    ensure_class_work(n, opts.cap)?;
    let paths: Vec<_> = dyck_paths(n).collect();

    // rho is a bijection realizing hpea(d) = pea(rho(d)) - 1.
    let mut images = Vec::new();
    for d in &paths {
        let r = rho(d);
        if rho_inv(&r) != *d {
            return Ok(Outcome::fail(format!("rho not inverted by rho_inv on {d}")));
        }
        if n >= 1 && d.peak_stats().hpea + 1 != r.peak_stats().pea {
            return Ok(Outcome::fail(format!("high-peak contract fails on {d}")));
        }
        images.push(r);
    }
    images.sort();
    images.dedup();
    if images.len() != paths.len() {
        return Ok(Outcome::fail("rho image has duplicates".into()));
    }

    for d in &paths {
        let l = lalanne_kreweras(d);
        if lalanne_kreweras(&l) != *d {
            return Ok(Outcome::fail(format!("Lalanne-Kreweras not involutive on {d}")));
        }
        if n >= 1 && d.peak_stats().pea + l.peak_stats().pea != n + 1 {
            return Ok(Outcome::fail(format!("peak complement fails on {d}")));
        }
        let c = lk_rho(d);
        if lk_rho(&c) != *d {
            return Ok(Outcome::fail(format!("lk_rho not involutive on {d}")));
        }
        if d.peak_stats().lpea != c.peak_stats().lpea {
            return Ok(Outcome::fail(format!("lk_rho changes low peaks on {d}")));
        }
    }

    // Top-descent removal is an involution on paths for every descent set.
    for bits in 1u32..(1 << n.saturating_sub(1)) {
        let set: BTreeSet<usize> = (1..n).filter(|i| bits >> (i - 1) & 1 == 1).collect();
        for d in &paths {
            let g = drop_top_descent_path(d, &set)?;
            if drop_top_descent_path(&g, &set)? != *d {
                return Ok(Outcome::fail(format!(
                    "descent removal not involutive on {d} with set {set:?}"
                )));
            }
        }
    }

    // Word-level involutions and their statistic windows.
    for w in nonnesting(n) {
        let sigma = w.underlying().expect("nonnesting by construction");
        let des_sigma = sigma.statistics().des;
        let s = w.statistics();

        let phi = to_identity_class(&w)?;
        let sp = phi.statistics();
        if sp.des != s.des - des_sigma || sp.plat != s.plat {
            return Ok(Outcome::fail(format!("identity-class contract fails on {w}")));
        }

        let a = wdes_involution(&w)?;
        if wdes_involution(&a)? != w {
            return Ok(Outcome::fail(format!("wdes involution fails on {w}")));
        }
        if s.wdes - des_sigma + (a.statistics().wdes - des_sigma) != n + 1 {
            return Ok(Outcome::fail(format!("wdes window fails on {w}")));
        }

        let b = wdes_global_involution(&w)?;
        if wdes_global_involution(&b)? != w {
            return Ok(Outcome::fail(format!("global wdes involution fails on {w}")));
        }
        if s.wdes + b.statistics().wdes != 2 * n {
            return Ok(Outcome::fail(format!("global wdes window fails on {w}")));
        }

        let c = des_involution(&w)?;
        if des_involution(&c)? != w {
            return Ok(Outcome::fail(format!("des involution fails on {w}")));
        }
        if s.des - des_sigma + (c.statistics().des - des_sigma) != n - 1 {
            return Ok(Outcome::fail(format!("des window fails on {w}")));
        }

        let e = des_global_involution(&w)?;
        if des_global_involution(&e)? != w {
            return Ok(Outcome::fail(format!("global des involution fails on {w}")));
        }
        if s.des + e.statistics().des != 2 * n - 2 {
            return Ok(Outcome::fail(format!("global des window fails on {w}")));
        }
    }
    Ok(Outcome::pass(None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, n: usize) -> VerificationReport {
        check_identity(name, n, &VerifyOptions::default()).unwrap()
    }

    #[test]
    fn main_identity_echoes_polynomial() {
        let report = run("main", 4);
        assert!(report.pass);
        let echoed = report.detail.unwrap();
        assert_eq!(
            echoed,
            "u^4 + t + 2tu + 3tu^2 + 11tu^4 + 15t^2 + 24t^2u + 33t^2u^2 + 11t^2u^4 \
             + 56t^3 + 44t^3u + 33t^3u^2 + t^3u^4 + 56t^4 + 24t^4u + 3t^4u^2 \
             + 15t^5 + 2t^5u + t^6"
        );
    }

    #[test]
    fn refined_with_explicit_sigma() {
        let opts = VerifyOptions {
            sigma: Some("213".parse().unwrap()),
            ..Default::default()
        };
        let report = check_identity("refined", 3, &opts).unwrap();
        assert!(report.pass);
        assert!(report.params.contains("sigma=213"));
    }

    #[test]
    fn all_identities_have_runners() {
        for name in IDENTITIES {
            let opts = VerifyOptions::default();
            let n = match *name {
                "b_asymmetry" => 4,
                "thm51" | "acount" | "b_count" | "eq34" | "inclusions" => 2,
                _ => 3,
            };
            let report = check_identity(name, n, &opts);
            match report {
                Ok(r) => assert!(r.pass, "{name}: {:?}", r.witness),
                Err(e) => panic!("{name}: {e}"),
            }
        }
    }

    #[test]
    fn unknown_identity() {
        assert!(matches!(
            check_identity("nope", 3, &VerifyOptions::default()),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let opts = VerifyOptions { cap: Cap(10), ..Default::default() };
        assert!(matches!(
            check_identity("main", 4, &opts),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn asymmetry_passes_only_when_asymmetric() {
        let opts = VerifyOptions { k: Some(3), ..Default::default() };
        assert!(check_identity("b_asymmetry", 4, &opts).unwrap().pass);
        // For k = 2 the distribution IS symmetric, so the negative check fails.
        let opts = VerifyOptions { k: Some(2), ..Default::default() };
        assert!(!check_identity("b_asymmetry", 4, &opts).unwrap().pass);
    }
}
