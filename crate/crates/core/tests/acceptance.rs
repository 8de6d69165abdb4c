//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use qpsum_core::combinat::{comp, setcomp, varrho, BlockOrder, Composition, PartOrder, Partition, Permutation};
use qpsum_core::fillings::{count_row_perms, enumerate_a, enumerate_ldd, enumerate_sd};
use qpsum_core::linear::{int, Basis, NcBasis, NcElement, QSymElement, SymBasis, SymElement};
use qpsum_core::verify::{Suite, SuiteReport};
use qpsum_core::{mn, ncqsym, qsym};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn same<T: PartialEq + std::fmt::Display>(label: &str, got: &T, want: &T) -> Result<(), String> {
    ensure(got == want, || format!("{label}: got {got}, expected {want}"))
}

fn q(basis: Basis, terms: &[(&[usize], i64)]) -> QSymElement {
    QSymElement::from_terms(basis, terms.iter().map(|(a, c)| (comp(a), int(*c))))
}

fn nc(basis: NcBasis, terms: &[(&[&[usize]], i64)]) -> NcElement {
    NcElement::from_terms(basis, terms.iter().map(|(phi, c)| (setcomp(phi), int(*c))))
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn suite(s: Suite, max_weight: usize) -> Outcome {
    let r: SuiteReport = s.run(max_weight);
    match r.failures.first() {
        None if r.passed() => Ok(r.to_string()),
        first => Err(format!("{r}; first counterexample: {}", first.map_or("?", String::as_str))),
    }
}

fn power_sum_in_monomials() -> Outcome {
    let lambda = part(&[2, 2, 1]);
    let a = enumerate_a(&lambda);
    ensure(a.len() == 6, || format!("|A(2,2,1)| = {}, expected 6", a.len()))?;
    let want = SymElement::from_terms(
        SymBasis::M,
        [(part(&[2, 2, 1]), int(2)), (part(&[3, 2]), int(2)), (part(&[4, 1]), int(1)), (part(&[5]), int(1))],
    );
    same("p(2,2,1)", &qsym::sym::p_to_m(&lambda), &want)?;
    Ok(format!("p(2,2,1) = {want}, 6 fillings"))
}

fn sd_fillings_example() -> Outcome {
    let alpha = comp(&[2, 1, 2]);
    let sd = enumerate_sd(&alpha, &PartOrder::Descending);
    ensure(sd.len() == 2, || format!("|SD(2,1,2)| = {}, expected 2", sd.len()))?;
    let mut readings: Vec<Composition> = sd.iter().map(|f| f.column_reading()).collect();
    let mut expected = vec![comp(&[2, 1, 2]), comp(&[3, 2])];
    readings.sort();
    expected.sort();
    ensure(readings == expected, || format!("column readings {readings:?}"))?;
    for f in &sd {
        let n = count_row_perms(f);
        ensure(n == 2u32.into(), || format!("row permutations of {f:?}: {n}, expected 2"))?;
    }
    let want = q(Basis::M, &[(&[2, 1, 2], 2), (&[3, 2], 2)]);
    same("P(2,1,2)", &qsym::p_to_m(&alpha, &PartOrder::Descending), &want)?;
    Ok(format!("P(2,1,2) = {want}, multiplicities 2 and 2"))
}

fn ldd_fillings_example() -> Outcome {
    let order = BlockOrder::dtilde();
    let first = setcomp(&[&[3, 4], &[1, 5], &[2]]);
    let second = setcomp(&[&[1, 5], &[3, 4], &[2]]);
    let n1 = enumerate_ldd(&first, &order).len();
    let n2 = enumerate_ldd(&second, &order).len();
    ensure(n1 == 2 && n2 == 4, || format!("LDD counts {n1} and {n2}, expected 2 and 4"))?;
    let want1 = nc(NcBasis::M, &[(&[&[3, 4], &[1, 5], &[2]], 1), (&[&[3, 4], &[1, 2, 5]], 1)]);
    let want2 = nc(
        NcBasis::M,
        &[
            (&[&[1, 5], &[3, 4], &[2]], 1),
            (&[&[1, 5], &[2, 3, 4]], 1),
            (&[&[1, 3, 4, 5], &[2]], 1),
            (&[&[1, 2, 3, 4, 5]], 1),
        ],
    );
    same("P_nc(34|15|2)", &ncqsym::p_to_m_nc(&first, &order), &want1)?;
    same("P_nc(15|34|2)", &ncqsym::p_to_m_nc(&second, &order), &want2)?;
    Ok("P_nc(34|15|2) has 2 terms, P_nc(15|34|2) has 4".into())
}

fn projection_example() -> Outcome {
    let x = nc(NcBasis::P(BlockOrder::dtilde()), &[(&[&[3, 4], &[1, 5], &[2]], 1), (&[&[1, 5], &[3, 4], &[2]], 1)]);
    let projected = ncqsym::project_rho(&x);
    let want = qsym::p_to_m(&comp(&[2, 2, 1]), &PartOrder::Descending);
    same("rho(P_nc(34|15|2) + P_nc(15|34|2))", &projected, &want)?;
    Ok(format!("projection = P(2,2,1) = {want}"))
}

fn ribbon_rule_example() -> Outcome {
    let alpha = comp(&[1, 2, 1, 1]);
    let want = q(Basis::F, &[(&[1, 1, 2, 1], -3), (&[1, 1, 3], -3), (&[1, 3, 1], 3), (&[1, 4], 3)]);
    same("composite path", &mn::composite_p_to_f(&alpha), &want)?;
    let (ribbon, _) = mn::ribbon_expansion(&alpha).map_err(|e| e.to_string())?;
    same("ribbon formula", &ribbon, &want)?;
    let (tuple, ht) = mn::build_d(&comp(&[1, 1, 3]), &alpha).map_err(|e| e.to_string())?;
    let sdr = tuple.count_sdr();
    ensure(ht == 1 && sdr == 3u32.into(), || format!("ht = {ht}, |SDR| = {sdr}, expected 1 and 3"))?;
    Ok(format!("P(1,2,1,1) = {want} by both paths, ht = 1, |SDR| = 3"))
}

fn statistics_example() -> Outcome {
    let order = BlockOrder::dtilde();
    let phi = setcomp(&[&[2], &[5], &[1, 4], &[3, 6], &[7]]);
    same("rho(5|13|2|4)", &setcomp(&[&[5], &[1, 3], &[2], &[4]]).rho(), &comp(&[1, 2, 1, 1]))?;
    same("varrho(1,6,4,3,6)", &varrho(&[1, 6, 4, 3, 6]), &setcomp(&[&[1], &[4], &[3], &[2, 5]]))?;
    same("rho_C(2|5|14|36|7)", &phi.rho_c(&order), &comp(&[2, 5]))?;
    same("rho_I(2|5|14|36|7)", &phi.rho_i(&order), &comp(&[2, 1, 2, 2]))?;
    let (lower, upper) = mn::interval_bounds(&comp(&[1, 2, 1, 1]));
    same("I(1,2,1,1)", &lower, &comp(&[1, 1, 2, 1]))?;
    same("C(1,2,1,1)", &upper, &comp(&[1, 4]))?;
    Ok("all six statistics match".into())
}

fn refinement_suite() -> Outcome {
    // Also checked here without the oracle: summing P over rearrangements.
    for n in 0..=6 {
        for lambda in Partition::all_of(n) {
            let sym = qsym::sym::to_qsym_m(&SymElement::basis_element(SymBasis::P, lambda.clone()));
            for order in [PartOrder::Descending, PartOrder::Ascending] {
                let sum = qsym::to_m(&qsym::sym::p_to_qsym_p(&lambda, &order));
                same(&format!("p{lambda} under {order}"), &sum, &sym)?;
            }
        }
    }
    suite(Suite::Refine, 6)
}

fn pwrsmim_suite() -> Outcome {
    let order = BlockOrder::dtilde();
    let first = ncqsym::rho_p_to_f(&setcomp(&[&[1, 5], &[3, 4], &[2]]), &order);
    let want = q(Basis::F, &[(&[5], 1), (&[1, 4], -1), (&[3, 2], -1), (&[1, 2, 2], 1)]);
    same("rho(P_nc(15|34|2))", &first, &want)?;
    let second = ncqsym::rho_p_to_f(&setcomp(&[&[4, 5], &[1], &[2]]), &order);
    same("rho(P_nc(45|1|2))", &second, &q(Basis::F, &[(&[4], 1), (&[1, 3], -1)]))?;
    suite(Suite::Pwrsmim, 5)
}

fn fima_suite() -> Outcome {
    let n5 = Permutation::all_of(5).len();
    ensure(n5 == 120, || format!("{n5} permutations of 5"))?;
    suite(Suite::Fima, 5)
}

fn coproduct_suite() -> Outcome {
    let x = q(Basis::Ptilde(PartOrder::Descending), &[(&[2, 1], 1)]);
    let t = qsym::coproduct(&x).map_err(|e| e.to_string())?;
    let cuts = [(&[][..], &[2, 1][..]), (&[2], &[1]), (&[2, 1], &[])];
    let exact = t.len() == 3 && cuts.iter().all(|(l, r)| t.coeff(&comp(l), &comp(r)) == int(1));
    ensure(exact, || format!("coproduct of Ptilde(2,1) = {t}"))?;
    suite(Suite::Coproduct, 4)
}

fn roundtrip_suite() -> Outcome {
    suite(Suite::OracleRoundtrip, 6)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("power sum p(2,2,1) in monomials", power_sum_in_monomials),
        ("strict diagonal fillings of (2,1,2)", sd_fillings_example),
        ("LDD fillings of 34|15|2 and 15|34|2", ldd_fillings_example),
        ("projection of P_nc sum to P(2,2,1)", projection_example),
        ("P(1,2,1,1) in fundamentals, two paths", ribbon_rule_example),
        ("composition and set composition statistics", statistics_example),
        ("refinement suite, weight <= 6", refinement_suite),
        ("shuffle product suite, weight <= 5", || suite(Suite::Shuffle, 5)),
        ("coproduct suite, weight <= 4", coproduct_suite),
        ("interval/Mobius suite, weight <= 5", pwrsmim_suite),
        ("permutation descent suite, n <= 5", fima_suite),
        ("round-trip suite, weight <= 6", roundtrip_suite),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
