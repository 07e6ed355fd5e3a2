//! Sturm chains over the whole real line and squarefree decomposition.

use num_traits::Signed;
use serde::Serialize;

use super::int::IntPoly;
use super::RatPolynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCount {
    pub degree: usize,
    pub distinct_real: usize,
    pub real_with_multiplicity: usize,
    pub is_real_rooted: bool,
}

/// `p, p', -rem(p, p'), ...` with each term reduced to its primitive part.
/// Dividing by a positive content leaves every sign unchanged.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone()];
    let mut prev = p.clone();
    let mut cur = p.derivative();
    while !cur.is_zero() {
        chain.push(cur.clone());
        let mut r = IntPoly::remainder(&prev, &cur);
        r.0.iter_mut().for_each(|v| *v = -&*v);
        prev = cur;
        cur = r;
    }
    chain
}

fn variations(signs: impl Iterator<Item = bool>) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for s in signs {
        if last.is_some_and(|l| l != s) {
            count += 1;
        }
        last = Some(s);
    }
    count
}

/// Distinct real roots read off a Sturm chain.
fn chain_root_count(chain: &[IntPoly]) -> usize {
    // sign at +inf is the sign of the leading coefficient; at -inf it flips
    // for odd degree
    let at_pos = variations(chain.iter().map(|q| q.leading().is_positive()));
    let at_neg = variations(
        chain
            .iter()
            .map(|q| q.leading().is_positive() ^ (q.degree() % 2 == 1)),
    );
    at_neg - at_pos
}

/// Number of distinct real roots of a nonconstant primitive polynomial.
fn distinct_real_roots(p: &IntPoly) -> usize {
    if p.degree() == 0 {
        return 0;
    }
    chain_root_count(&sturm_chain(p))
}

/// Musser's decomposition: `f = c · ∏ f_i^i` with each `f_i` squarefree and
/// pairwise coprime. Returns the nonconstant `(f_i, i)`.
pub fn squarefree_decomposition(f: &RatPolynomial) -> Result<Vec<(RatPolynomial, usize)>> {
    if f.is_zero() {
        return Err(Error::Domain("squarefree decomposition of the zero polynomial".into()));
    }
    Ok(squarefree_int(&IntPoly::from_rat(f))
        .into_iter()
        .map(|(p, i)| (p.to_rat(), i))
        .collect())
}

fn squarefree_int(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let mut g = IntPoly::gcd(f, &f.derivative());
    let mut w = IntPoly::exact_div(f, &g);
    let mut i = 1;
    while w.degree() > 0 {
        let y = IntPoly::gcd(&w, &g);
        let factor = IntPoly::exact_div(&w, &y);
        if factor.degree() > 0 {
            out.push((factor, i));
        }
        g = IntPoly::exact_div(&g, &y);
        w = y;
        i += 1;
    }
    out
}

/// Real roots over `(-inf, inf)`, distinct and with multiplicity.
///
/// The last element of the Sturm chain is `gcd(f, f')`; when it is constant
/// `f` is squarefree and the chain alone decides. Otherwise multiplicities
/// come from the squarefree decomposition.
pub fn count_real_roots(f: &RatPolynomial) -> Result<RootCount> {
    let degree = f
        .degree()
        .ok_or_else(|| Error::Domain("root count of the zero polynomial".into()))?;
    let p = IntPoly::from_rat(f);
    let (distinct_real, real_with_multiplicity) = if degree == 0 {
        (0, 0)
    } else {
        let chain = sturm_chain(&p);
        let distinct = chain_root_count(&chain);
        let gcd = chain.last().expect("chain holds p");
        if gcd.degree() == 0 {
            (distinct, distinct)
        } else {
            let mut total = 0;
            let mut check = 0;
            for (factor, mult) in squarefree_int(&p) {
                let r = distinct_real_roots(&factor);
                check += r;
                total += r * mult;
            }
            if check != distinct {
                return Err(Error::Consistency(format!(
                    "squarefree parts give {check} distinct real roots, Sturm chain gives {distinct}"
                )));
            }
            (distinct, total)
        }
    };
    Ok(RootCount {
        degree,
        distinct_real,
        real_with_multiplicity,
        is_real_rooted: real_with_multiplicity == degree,
    })
}
