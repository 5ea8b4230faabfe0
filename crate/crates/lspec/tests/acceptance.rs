//! The ten acceptance criteria. Each prints one PASS/FAIL line; the target
//! exits nonzero if any criterion fails.

use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lspec::algebra::{ExtInt, Field, Poly, RatFunc, Series};
use lspec::btree::{intersection, Intersection, Line, Vertex};
use lspec::cli::verify::{suite_rows, word_axis, Row};
use lspec::cli::{Format, RunConfig, Suite};
use lspec::contfrac::{cf_expand_quadratic, cf_expand_rational, gamma_equivalent, periodic_word_to_quadratic, CfWord};
use lspec::modgroup::{
    enumerate_group, ray_stabilizer_order, ray_vertex, stabilizer_order, vertex_stabilizer_order,
};
use lspec::spectrum::{
    c_alpha_axes, hall_constants_of_axis, hurwitz_estimate_axis, spectrum_sample, ApproxValue, CertKind,
    SearchBudget, TargetGenerator,
};

type Verdict = (bool, String);

fn config(q: u32) -> RunConfig {
    RunConfig {
        field: Field::with_order(q).unwrap(),
        budget: SearchBudget { stream_horizon: 48, ..SearchBudget::default() },
        format: Format::Json,
        seed: 0,
    }
}

fn rows(q: u32, suite: Suite, trials: usize) -> Vec<Row> {
    suite_rows(&config(q), suite, 4, 2, trials).unwrap()
}

fn failed(rows: &[&Row]) -> Vec<String> {
    rows.iter().filter(|r| !r.ok).map(|r| format!("{} vs {}: {} (expected {})", r.alpha_id, r.x_id, r.computed, r.expected)).collect()
}

fn golden() -> Verdict {
    let mut total = 0;
    let mut bad = Vec::new();
    for q in [2, 3] {
        let rs = rows(q, Suite::Golden, 0);
        total += rs.len();
        for r in &rs {
            let b_agrees = r.note["engine_b"]["covers_witness"] == true && r.note["engine_b"]["best"] == -r.computed.parse::<i64>().unwrap_or(0);
            if !r.ok || !b_agrees {
                bad.push(format!("q={q} {}: {} (expected {}), engine B {}", r.x_id, r.computed, r.expected, r.note["engine_b"]));
            }
        }
    }
    (total == 18 && bad.is_empty(), format!("{total} exact values with engine B agreement, failures {bad:?}"))
}

fn ceiling() -> Verdict {
    let f = Field::prime(3).unwrap();
    let alphas = ["[per: Y]", "[per: Y, Y+1]", "[per: Y^2]", "[per: Y^2+1, Y^3]", "[Y; per: Y^2+Y, Y+2]"];
    let generator = TargetGenerator { max_period: 3, max_targets: 200, ..TargetGenerator::default() };
    let mut detail = Vec::new();
    let mut ok = true;
    for a in alphas {
        let ax = word_axis(f, a).unwrap();
        let s = spectrum_sample(&ax, &generator, &SearchBudget::default()).unwrap();
        let exact: Vec<_> = s.points.iter().filter(|p| p.certificate.kind == CertKind::Exact).collect();
        let over = exact.iter().filter(|p| p.value > ApproxValue::Pow(-2)).count();
        ok &= exact.len() >= 200 && over == 0;
        detail.push(format!("{a}: {} exact, {over} above q^-2", exact.len()));
    }
    (ok, detail.join("; "))
}

fn small_period_hurwitz() -> Verdict {
    let rs = rows(3, Suite::HurwitzSmallPeriod, 0);
    let bad = failed(&rs.iter().collect::<Vec<_>>());
    // [per: Y, Y^2] has M = 2 but m = 1; degree-one cycles reach only q^-3 there
    let f = Field::prime(3).unwrap();
    let ax = word_axis(f, "[per: Y, Y^2]").unwrap();
    let h = hurwitz_estimate_axis(&ax, &TargetGenerator::default(), &SearchBudget::default()).unwrap();
    let deg1: Vec<String> = ["Y", "Y+1", "Y+2"]
        .iter()
        .map(|p| {
            let x = word_axis(f, &format!("[per: {p}]")).unwrap();
            c_alpha_axes(&ax, &x, &SearchBudget::default()).unwrap().0.to_string()
        })
        .collect();
    let diag = format!(
        "diagnostic [per: Y, Y^2]: hurwitz {} ({}), degree-one cycles give {deg1:?}",
        h.value,
        h.certificate.kind.as_str()
    );
    (rs.len() == 10 && bad.is_empty(), format!("{} alphas exact q^-2 with degree-one witness, failures {bad:?}; {diag}", rs.len()))
}

fn m2_pairs(families: &[Row]) -> Verdict {
    let rs: Vec<&Row> = families.iter().filter(|r| r.alpha_id != "E22").collect();
    let bad = failed(&rs);
    (rs.len() == 10 && bad.is_empty(), format!("{} pairs at q^-M2, failures {bad:?}", rs.len()))
}

fn e22(families: &[Row]) -> Verdict {
    let rs: Vec<&Row> = families.iter().filter(|r| r.alpha_id == "E22").collect();
    let bad = failed(&rs);
    (rs.len() == 4 && bad.is_empty(), format!("three degree-3 cycles and the hurwitz constant at q^-4, failures {bad:?}"))
}

fn gaps() -> Verdict {
    let mut bad = Vec::new();
    let mut values = Vec::new();
    for q in [2, 3] {
        let rs = rows(q, Suite::Gaps, 0);
        bad.extend(failed(&rs.iter().collect::<Vec<_>>()).into_iter().map(|s| format!("q={q} {s}")));
        values.push(format!("q={q} values {}", rs[0].note["values"]));
    }
    (bad.is_empty(), format!("q^-3 absent, q^-2 present, three values <= q^-4; {}; failures {bad:?}", values.join("; ")))
}

fn oracles() -> Verdict {
    let mut bad = Vec::new();
    for q in [2, 3, 4] {
        let rs = rows(q, Suite::Oracles, 1000);
        bad.extend(failed(&rs.iter().collect::<Vec<_>>()).into_iter().map(|s| format!("q={q} {s}")));
    }
    (bad.is_empty(), format!("3 x 1000 trials, failures {bad:?}"))
}

fn random_poly(f: Field, rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Poly {
    let q = f.q() as u16;
    let deg = rng.gen_range(lo..=hi);
    let mut c: Vec<u16> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
    c.push(rng.gen_range(1..q));
    Poly::from_coeffs(f, c)
}

/// Determinant and approximation identities for the first `n` convergents of
/// `word`, whose value is known through `val_of_error`.
fn convergent_identities(word: &CfWord, n: usize, val_of_error: impl Fn(&RatFunc) -> ExtInt) -> Result<(), String> {
    let f = word.field();
    let cs = word.convergents(n).map_err(|e| e.to_string())?;
    for i in 1..cs.len() {
        let det = cs[i].p.mul(&cs[i - 1].q).sub(&cs[i - 1].p.mul(&cs[i].q));
        let sign = if i % 2 == 1 { f.from_int(1) } else { f.from_int(-1) };
        if det != Poly::constant(f, sign) {
            return Err(format!("{word}: det at {i} is {det}"));
        }
    }
    for i in 0..cs.len() - 1 {
        let r = RatFunc::new(cs[i].p.clone(), cs[i].q.clone()).unwrap();
        let want = (cs[i].q.deg() + cs[i + 1].q.deg()) as i64;
        if val_of_error(&r) != ExtInt::Fin(want) {
            return Err(format!("{word}: approximation at {i} is {:?}, expected {want}", val_of_error(&r)));
        }
    }
    Ok(())
}

fn cf_soundness() -> Verdict {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let fields: Vec<Field> = [2, 3, 4, 5].iter().map(|&q| Field::with_order(q).unwrap()).collect();
    for t in 0..500 {
        let f = fields[t % fields.len()];
        let num = if rng.gen_bool(0.1) { Poly::zero(f) } else { random_poly(f, &mut rng, 0, 8) };
        let r = RatFunc::new(num, random_poly(f, &mut rng, 0, 8)).unwrap();
        let w = cf_expand_rational(&r);
        if w.evaluate().ok() != Some(r.clone()) {
            bad.push(format!("rational {r:?} expands to {w}"));
            continue;
        }
        let len = w.len_finite().unwrap();
        if let Err(e) = convergent_identities(&w, len - 1, |c| r.sub(c).val()) {
            bad.push(e);
        }
    }
    let budget = SearchBudget::default();
    for t in 0..100 {
        let f = fields[t % 2];
        let a0 = random_poly(f, &mut rng, 0, 2);
        let pre = (0..rng.gen_range(0..3)).map(|_| random_poly(f, &mut rng, 1, 2)).collect();
        let per = (0..rng.gen_range(1..4)).map(|_| random_poly(f, &mut rng, 1, 2)).collect();
        let w = CfWord::new(a0, pre, per).unwrap();
        let alpha = periodic_word_to_quadratic(&w).unwrap();
        let back = cf_expand_quadratic(&alpha, 10_000).unwrap();
        let group = enumerate_group(f, 1);
        let g = &group[rng.gen_range(0..group.len())];
        let moved = cf_expand_quadratic(&g.apply_quadratic(&alpha).unwrap(), 10_000).unwrap();
        let eq = gamma_equivalent(&w, &moved, 2, &budget).map(|e| e.is_equivalent());
        if back != w || eq.as_ref().ok() != Some(&true) {
            bad.push(format!("word {w}: round trip {back}, translate {moved} equivalent {eq:?}"));
        }
        let horizon = 400;
        let s = alpha.series(horizon).unwrap();
        if let Err(e) = convergent_identities(&w, 12, |c| {
            let d = s.sub(&Series::from_rational(c, horizon));
            d.val().unwrap_or(ExtInt::PosInf)
        }) {
            bad.push(e);
        }
    }
    (bad.is_empty(), format!("500 rationals, 100 periodic words, failures {:?}", &bad[..bad.len().min(5)]))
}

fn hallray() -> Verdict {
    let rs = rows(3, Suite::Hallray, 0);
    let bad = failed(&rs.iter().collect::<Vec<_>>());
    let detail: Vec<String> = rs.iter().map(|r| format!("{}: {} [{}]", r.x_id, r.computed, r.kind)).collect();
    (rs.len() == 2 && bad.is_empty(), detail.join("; "))
}

fn group_fixtures() -> Verdict {
    let mut bad = Vec::new();
    for q in [2u32, 3, 4] {
        let f = Field::with_order(q).unwrap();
        let q = q as u64;
        let base = Vertex::base(f);
        let count = vertex_stabilizer_order(&base, 0);
        if !count.complete || count.order != q * q * q - q || stabilizer_order(&base) != q * q * q - q {
            bad.push(format!("q={q} base: enumeration {count:?}, reduction {}", stabilizer_order(&base)));
        }
        for n in [0i64, 1] {
            let v = ray_vertex(f, n + 1);
            let want = (q - 1) * q.pow(n as u32 + 2);
            let red = stabilizer_order(&v);
            let formula = ray_stabilizer_order(q, n + 1);
            let enumerated = (q <= 3).then(|| vertex_stabilizer_order(&v, n as usize + 1));
            if red != want || formula != want || enumerated.is_some_and(|c| !c.complete || c.order != want) {
                bad.push(format!("q={q} Γ_{n}: reduction {red}, formula {formula}, enumeration {enumerated:?}"));
            }
        }
    }
    let f = Field::prime(3).unwrap();
    let group = enumerate_group(f, 2);
    let mut lemma = Vec::new();
    for a in ["[per: Y]", "[per: Y, Y+1]", "[per: Y^2]"] {
        let ax = word_axis(f, a).unwrap();
        let hc = hall_constants_of_axis(&ax);
        let bound = (hc.k as i64 + 1) * hc.ell - 1;
        let line = ax.line(200).unwrap();
        let (mut checked, mut longest) = (0, i64::MIN);
        for g in &group {
            let b = g.apply_quadratic(&ax.alpha).unwrap();
            if b.same_root(&ax.alpha) || b.same_root(&ax.alpha.conjugate()) {
                continue;
            }
            let n = match intersection(&Line::of_quadratic(&b, 200).unwrap(), &line).unwrap() {
                Intersection::Overlap { length: ExtInt::Fin(n), .. } => n,
                Intersection::Overlap { .. } => i64::MAX,
                Intersection::Disjoint { distance } => -distance,
            };
            longest = longest.max(n);
            if n >= bound {
                bad.push(format!("{a}: translate {g:?} overlaps {n} >= {bound}"));
            }
            checked += 1;
            if checked == 500 {
                break;
            }
        }
        if checked < 500 {
            bad.push(format!("{a}: only {checked} translates"));
        }
        lemma.push(format!("{a}: longest {longest} < {bound}"));
    }
    (bad.is_empty(), format!("stabilizers q^3-q and Γ_0, Γ_1 orders agree; 500 translates per axis, {}; failures {bad:?}", lemma.join(", ")))
}

fn main() {
    let results: Vec<Verdict> = thread::scope(|s| {
        let families = s.spawn(|| rows(3, Suite::Families, 0));
        let handles = [
            s.spawn(golden),
            s.spawn(ceiling),
            s.spawn(small_period_hurwitz),
            s.spawn(gaps),
            s.spawn(oracles),
            s.spawn(cf_soundness),
            s.spawn(hallray),
            s.spawn(group_fixtures),
        ];
        let mut out: Vec<Verdict> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        let families = families.join().unwrap();
        out.insert(3, m2_pairs(&families));
        out.insert(4, e22(&families));
        out
    });
    let names = [
        "golden spectrum",
        "universal ceiling",
        "small-period hurwitz constants",
        "M2 attainment",
        "E(2,2) example",
        "gap certificate",
        "oracle equivalence",
        "continued fraction soundness",
        "hall ray properties",
        "group fixtures",
    ];
    let mut all = true;
    for (i, ((ok, detail), name)) in results.iter().zip(names).enumerate() {
        println!("criterion {:>2} {name}: {} {detail}", i + 1, if *ok { "PASS" } else { "FAIL" });
        all &= ok;
    }
    if !all {
        std::process::exit(1);
    }
}
