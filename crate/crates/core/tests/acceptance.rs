//! End-to-end acceptance run: one line per criterion, each timed against a 60 s budget.

use heckecliff::cartan::Weight;
use heckecliff::grothendieck::{character_library, integrality_check, serre_degree, serre_verify, ses_check, shuffle};
use heckecliff::realizations::{check_binfty, check_blambda};
use heckecliff::scalars::identities::{fund_value, tech_expression};
use heckecliff::scalars::{FieldCtx, FieldElem, Tower};
use heckecliff::supermodules::*;
use std::time::{Duration, Instant};

const BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn scalar_identities() -> Outcome {
    for l in 2usize..=6 {
        let ctx = FieldCtx::get(l);
        for i in 0..l {
            for j in 0..l {
                if i.abs_diff(j) > 1 {
                    continue;
                }
                let t = tech_expression(l, i, j).map_err(|e| e.to_string())?;
                ensure(t.is_zero(), || format!("tech expression nonzero at l={l} ({i},{j})"))?;
                if i != j {
                    let f = fund_value(l, i, j).ok_or(format!("q({i}) = q({j}) at l={l}"))?;
                    ensure(f == FieldElem::one(&ctx), || format!("fundamental value {f} at l={l} ({i},{j})"))?;
                }
            }
        }
    }
    Ok(())
}

fn all_pass(checks: &[Check], what: &str) -> Outcome {
    match checks.iter().find(|c| !c.passed()) {
        Some(c) => Err(format!("{what}: {} at l={} {:?} {:?}: {}", c.check, c.l, c.i, c.j, c.witness)),
        None => Ok(()),
    }
}

fn relations() -> Outcome {
    for l in 2..=5 {
        let checks = builder_suite(l).map_err(|e| e.to_string())?;
        all_pass(&checks, "relations")?;
        let need: &[&str] = if l == 2 { &["L01", "L001"] } else { &["L(01)", "L(001)"] };
        for n in need {
            ensure(checks.iter().any(|c| c.check == *n), || format!("l={l}: no {n}"))?;
        }
    }
    Ok(())
}

fn require(checks: &[Check], prefix: &str, l: usize) -> Outcome {
    ensure(checks.iter().any(|c| c.check.starts_with(prefix)), || format!("l={l}: no check {prefix}"))
}

fn irreducibility() -> Outcome {
    for l in 2..=5 {
        let checks = section_suite(l).map_err(|e| e.to_string())?;
        let structural: Vec<Check> = checks.iter().filter(|c| !c.check.contains(" ch ")).cloned().collect();
        all_pass(&structural, "suite")?;
        let names: &[&str] = match l {
            2 => &["l2 rank3 T2N in N", "l2 rank4 T3N not in N", "l2 rank4 2xi+4 != 0", "l2 rank4 T3Z != (Z-W)/2"],
            3 => &["rank2 T1N in N", "rank3 T2N in N", "rank3 end T3N not in N", "rank3 end q(j)+2q(i) != 0"],
            _ => &[
                "rank2 T1N in N",
                "rank3 T2N in N",
                "mid T2N not in N",
                "mid q(i)q(j)+q(j)^2-8 != 0",
                "rank3 end T3N not in N",
                "rank3 end q(j)+2q(i) != 0",
            ],
        };
        for n in names {
            require(&checks, n, l)?;
        }
    }
    Ok(())
}

fn characters() -> Outcome {
    for l in 2..=5 {
        let checks = section_suite(l).map_err(|e| e.to_string())?;
        let chars: Vec<Check> = checks.iter().filter(|c| c.check.contains(" ch ")).cloned().collect();
        all_pass(&chars, "characters")?;
        let names: &[&str] = if l == 2 {
            &["l2 rank2 ch L(01)", "l2 rank3 ch L(001)", "l2 rank4 ch L(0001)", "l2 rank4 ch L(1000)", "l2 rank4 ch L(0100)"]
        } else {
            &["rank2 ch L(ij)", "rank3 ch L(iij)", "rank4 ch L(iiij)", "rank4 ch L(jiii)", "rank4 ch L(ijii)"]
        };
        for n in names {
            require(&checks, n, l)?;
        }
    }
    Ok(())
}

/// Every pair of built modules of total rank ≤ 4 whose indices fit one scalar tower.
fn induction_pairs(l: usize) -> Result<Vec<(MatrixSupermodule, MatrixSupermodule)>, String> {
    let ctx = FieldCtx::get(l);
    let e = |x: heckecliff::error::SupermoduleError| x.to_string();
    let mut out = Vec::new();
    if l == 2 {
        let t = Tower::field_for_indices(&ctx, &[]).map_err(|x| x.to_string())?;
        let singles = [build_l(&t, 0).map_err(e)?, build_l(&t, 1).map_err(e)?];
        let l01 = build_l01(&t).map_err(e)?;
        let l001 = build_l001(&t).map_err(e)?;
        for x in &singles {
            for y in &singles {
                out.push((x.clone(), y.clone()));
            }
            for m in [&l01, &l001] {
                out.push((m.clone(), x.clone()));
                out.push((x.clone(), m.clone()));
            }
        }
        out.push((l01.clone(), l01.clone()));
        out.push((l01.sign_twist(), singles[0].clone()));
        return Ok(out);
    }
    let pairs: Vec<(usize, usize)> = (0..l)
        .flat_map(|i| (0..l).map(move |j| (i, j)))
        .filter(|&(i, j)| i.abs_diff(j) == 1 && !(is_end(l, i) && is_end(l, j)))
        .collect();
    let tower = |idx: &[usize]| {
        let mut idx = idx.to_vec();
        idx.sort();
        idx.dedup();
        Tower::field_for_indices(&ctx, &idx).ok()
    };
    for i in 0..l {
        for k in 0..l {
            let Some(t) = tower(&[i, k]) else { continue };
            out.push((build_l(&t, i).map_err(e)?, build_l(&t, k).map_err(e)?));
        }
    }
    for &(i, j) in &pairs {
        for k in 0..l {
            let Some(t) = tower(&[i, j, k]) else { continue };
            let lij = build_l_ij(&t, i, j).map_err(e)?;
            let lk = build_l(&t, k).map_err(e)?;
            out.push((lij.clone(), lk.clone()));
            out.push((lk.clone(), lij));
            if is_end(l, i) {
                out.push((build_l_iij(&t, i, j).map_err(e)?, lk));
            }
        }
        for &(m, n) in &pairs {
            let Some(t) = tower(&[i, j, m, n]) else { continue };
            out.push((build_l_ij(&t, i, j).map_err(e)?, build_l_ij(&t, m, n).map_err(e)?));
        }
    }
    Ok(out)
}

/// ch Ind(M ⊛ N) = shuffle(ch M, ch N).
fn induction_matches(a: &MatrixSupermodule, b: &MatrixSupermodule) -> Outcome {
    let e = |x: heckecliff::error::SupermoduleError| x.to_string();
    let ind = induced(&star(a, b).map_err(e)?).map_err(e)?;
    let want = shuffle(&formal_character(a).map_err(e)?, &formal_character(b).map_err(e)?);
    let got = formal_character(&ind).map_err(e)?;
    ensure(got == want, || format!("Ind({} ⊛ {}) has ch {got}, shuffle gives {want}", a.label, b.label))
}

fn shuffle_and_ses() -> Outcome {
    for l in 2usize..=5 {
        for i in 0..l {
            for j in 0..l {
                if i.abs_diff(j) != 1 {
                    continue;
                }
                let k = serre_degree(l, i, j).map_err(|e| e.to_string())?;
                for a in 0..k {
                    for b in 0..(k - a) {
                        ensure(ses_check(l, i, j, a, b).map_err(|e| e.to_string())?, || {
                            format!("ses fails at l={l} ({i},{j}) a={a} b={b}")
                        })?;
                    }
                }
            }
        }
    }
    let mut jobs = Vec::new();
    for l in 2..=4 {
        let p = induction_pairs(l)?;
        ensure(!p.is_empty(), || format!("no induction pairs at l={l}"))?;
        jobs.extend(p);
    }
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get());
    let next = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|s| {
        let workers: Vec<_> = (0..threads)
            .map(|_| {
                s.spawn(|| loop {
                    let k = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    let Some((a, b)) = jobs.get(k) else { return Ok(()) };
                    induction_matches(a, b)?;
                })
            })
            .collect();
        workers.into_iter().try_for_each(|w| w.join().expect("worker panicked"))
    })
}

fn serre() -> Outcome {
    for l in 2..=5 {
        let r = serre_verify(l).map_err(|e| e.to_string())?;
        ensure(r.passed() && !r.checks.is_empty(), || format!("Serre relations fail at l={l}"))?;
    }
    Ok(())
}

fn crystal_binfty() -> Outcome {
    for l in 2..=4 {
        let r = check_binfty(l, 6).map_err(|e| e.to_string())?;
        if let Some(c) = r.checks.iter().find(|c| !c.pass) {
            return Err(format!("l={l}: {} {}", c.name, c.detail));
        }
    }
    Ok(())
}

fn crystal_blambda() -> Outcome {
    for l in 2..=3 {
        let lams = [
            Weight::fundamental(l, 0),
            Weight::fundamental(l, l - 1),
            Weight::fundamental(l, 0).add(&Weight::fundamental(l, l - 1)),
        ];
        for lam in lams {
            let r = check_blambda(l, &lam, 8).map_err(|e| e.to_string())?;
            if let Some(c) = r.checks.iter().find(|c| !c.pass) {
                return Err(format!("l={l} λ={:?}: {} {}", lam.lam, c.name, c.detail));
            }
        }
    }
    Ok(())
}

fn integrality() -> Outcome {
    for l in 2..=6 {
        let lib = character_library(l).map_err(|e| e.to_string())?;
        ensure(!lib.is_empty(), || format!("empty library at l={l}"))?;
        for entry in &lib {
            integrality_check(entry).map_err(|e| format!("l={l}: {e}"))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("scalar identities", scalar_identities),
        ("relation verification", relations),
        ("irreducibility suite", irreducibility),
        ("formal characters", characters),
        ("shuffle and short exact sequences", shuffle_and_ses),
        ("Serre relations", serre),
        ("crystal B(inf)", crystal_binfty),
        ("crystal B(lambda)", crystal_blambda),
        ("integrality", integrality),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let res = res.and_then(|_| ensure(took < BUDGET, || format!("took {took:.1?}, over budget")));
        match res {
            Ok(()) => println!("criterion {}: {name}: pass ({took:.2?})", k + 1),
            Err(m) => {
                failed += 1;
                println!("criterion {}: {name}: FAIL ({took:.2?}): {m}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
