//! Words with known spectra: the golden witnesses and the families built from
//! exhaustive lists of coefficients.

use crate::algebra::{Field, Poly};
use crate::contfrac::CfWord;
use crate::error::{Error, Result};

/// Polynomials of degree `lo..=hi` ordered by degree, then coefficients from the top.
pub fn polys_in_degree_range(field: Field, lo: usize, hi: usize) -> Vec<Poly> {
    let mut out: Vec<Poly> = (lo..=hi).flat_map(|d| Poly::all_of_degree(field, d)).collect();
    out.sort();
    out
}

/// The period listing every length-`m` sequence of polynomials of degree
/// `1..=k`, sequences in lexicographic order: `(q^{k+1} - q)^m` blocks.
pub fn family_e(field: Field, m: usize, k: usize, size_cap: usize) -> Result<CfWord> {
    if m < 1 || k < 1 {
        return Err(Error::Precondition("family E needs m, k >= 1".into()));
    }
    let polys = polys_in_degree_range(field, 1, k);
    let blocks = (polys.len() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if blocks.saturating_mul(m as u128) > size_cap as u128 {
        return Err(Error::SizeCap(format!("{blocks} blocks of length {m} exceed {size_cap} coefficients")));
    }
    let mut period = Vec::with_capacity(blocks as usize * m);
    let mut idx = vec![0usize; m];
    for _ in 0..blocks {
        period.extend(idx.iter().map(|&i| polys[i].clone()));
        for j in (0..m).rev() {
            idx[j] += 1;
            if idx[j] < polys.len() {
                break;
            }
            idx[j] = 0;
        }
    }
    CfWord::purely_periodic(&period)
}

/// The period listing every polynomial of degree `k..=2k`: `q^{2k+1} - q^k` coefficients.
pub fn family_f(field: Field, k: usize, size_cap: usize) -> Result<CfWord> {
    if k < 1 {
        return Err(Error::Precondition("family F needs k >= 1".into()));
    }
    let polys = polys_in_degree_range(field, k, 2 * k);
    if polys.len() > size_cap {
        return Err(Error::SizeCap(format!("{} coefficients exceed {size_cap}", polys.len())));
    }
    CfWord::purely_periodic(&polys)
}

/// `f_m = [0; per: Y^2, P, .., P]` and `f'_m = [0; per: Y^2, P, .., P, P + 1]`
/// with `m` copies of `P`.
pub fn golden_witnesses(p: &Poly, m: usize) -> Result<(CfWord, CfWord)> {
    if p.deg_opt() != Some(1) {
        return Err(Error::Precondition(format!("{p} is not of degree 1")));
    }
    let f = p.field();
    let y2 = Poly::monomial(f, 1, 2);
    let mut per = vec![y2];
    per.extend(std::iter::repeat_n(p.clone(), m));
    let mut per2 = per.clone();
    per2.push(p.add(&Poly::one(f)));
    Ok((CfWord::new(Poly::zero(f), Vec::new(), per)?, CfWord::new(Poly::zero(f), Vec::new(), per2)?))
}

/// `[per: a_{p+1} + Y^{M+1}, a_p + Y^{M+1}]` for the first cyclically
/// adjacent pair `(a_p, a_{p+1})` of largest degree sum.
pub fn m2_witness(alpha: &CfWord) -> Result<CfWord> {
    let cyc = alpha.period();
    if cyc.is_empty() {
        return Err(Error::Domain("word has no period".into()));
    }
    let f = alpha.field();
    let k = cyc.len();
    let big = cyc.iter().map(Poly::deg).max().unwrap();
    let p = (0..k).max_by_key(|&i| (cyc[i].deg() + cyc[(i + 1) % k].deg(), std::cmp::Reverse(i))).unwrap();
    let lift = Poly::monomial(f, 1, big + 1);
    CfWord::purely_periodic(&[cyc[(p + 1) % k].add(&lift), cyc[p].add(&lift)])
}

/// Whether every length-`m` sequence of polynomials of degree `1..=k` occurs
/// cyclically in the period, and only such coefficients appear.
pub fn contains_all_blocks(alpha: &CfWord, m: usize, k: usize) -> bool {
    let cyc = alpha.period();
    if cyc.is_empty() || cyc.iter().any(|c| c.deg() > k) {
        return false;
    }
    let f = alpha.field();
    let count = (polys_in_degree_range(f, 1, k).len() as u128).pow(m as u32);
    if count > cyc.len() as u128 {
        return false;
    }
    let n = cyc.len();
    let seen: std::collections::HashSet<Vec<&Poly>> = (0..n).map(|i| (0..m).map(|j| &cyc[(i + j) % n]).collect()).collect();
    seen.len() as u128 == count
}

/// Named presets for the command line.
pub fn preset(field: Field, name: &str, size_cap: usize) -> Result<Option<CfWord>> {
    let y = Poly::y(field);
    Ok(Some(match name {
        "golden" => CfWord::purely_periodic(&[y])?,
        "golden-shifted" => CfWord::new(y.add(&Poly::one(field)), Vec::new(), vec![y])?,
        "f1" => golden_witnesses(&y, 1)?.0,
        "E22" => family_e(field, 2, 2, size_cap)?,
        "F2" => family_f(field, 2, size_cap)?,
        _ => return Ok(None),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let f3 = Field::prime(3).unwrap();
        let f2 = Field::prime(2).unwrap();
        let e = family_e(f3, 2, 2, 5000).unwrap();
        assert_eq!(e.period().len(), 1152);
        assert!(contains_all_blocks(&e, 2, 2));
        assert_eq!(family_e(f2, 2, 2, 5000).unwrap().period().len(), 72);
        let fw = family_f(f3, 2, 5000).unwrap();
        assert_eq!(fw.period().len(), 234);
        let st = fw.stats().unwrap();
        assert_eq!((st.min_deg, st.max_deg), (2, 4));
        assert_eq!(family_f(f2, 2, 5000).unwrap().period().len(), 28);
        assert!(family_e(f3, 3, 2, 5000).is_err());
    }

    #[test]
    fn golden_words() {
        let f = Field::prime(3).unwrap();
        let (a, b) = golden_witnesses(&Poly::y(f), 1).unwrap();
        assert_eq!(a.to_string(), "[0; per: Y^2, Y]");
        assert_eq!(b.to_string(), "[0; per: Y^2, Y, Y+1]");
        assert_eq!(golden_witnesses(&Poly::y(f), 0).unwrap().0.to_string(), "[0; per: Y^2]");
    }
}
