//! Named verification checks with reproducible failure witnesses.

mod fixtures;
pub mod properties;

pub use fixtures::{fixture, fixture_names, Erratum, Fixture};

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::center::{
    diagram_checks, expected_transition, family_transition, gamma_coordinates, gamma_oracle,
    geck_rouquier_basis, solomon_polynomials, FamilyKind,
};
use crate::characters::{
    char_table, character, character_matrix_checks, diagonal_matrix, factored_char_table,
    family_character_matrix, DiagonalKind, TableFamily, TableMethod,
};
use crate::coeff::{rat, Coeff};
use crate::combi::{compositions, partitions, Composition, Partition, SymGroup};
use crate::error::{Error, Result};
use crate::hecke::{
    frobenius_phi, jm_elementary_all, normalize, signed_sum, upsilon, yang_baxter_gram,
    HeckeElement, SignedKind,
};
use crate::symfunc::{transition_matrix, Basis, QMatrix, SymmetricFunction};

use properties::Outcome;

/// A located disagreement, values in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, got {}",
            self.location, self.expected, self.actual
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_seconds: f64,
    /// Matrix the check is about, when it has one.
    #[serde(skip)]
    pub matrix: Option<QMatrix>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} {} ({:.3}s)",
            self.theorem, self.n, self.status, self.elapsed_seconds
        )?;
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  {w}")?;
        }
        Ok(())
    }
}

/// Raw outcome of one check before timing is attached.
#[derive(Default)]
struct Check {
    witness: Option<Witness>,
    matrix: Option<QMatrix>,
    note: Option<String>,
    skipped: bool,
}

impl Check {
    fn skip(note: impl Into<String>) -> Self {
        Check {
            skipped: true,
            note: Some(note.into()),
            ..Check::default()
        }
    }

    fn from_outcome(o: Option<Witness>) -> Self {
        Check {
            witness: o,
            ..Check::default()
        }
    }

    /// Keeps the first failure.
    fn and(mut self, w: Option<Witness>) -> Self {
        if self.witness.is_none() {
            self.witness = w;
        }
        self
    }
}

pub fn compare_matrices(context: &str, expected: &QMatrix, actual: &QMatrix) -> Option<Witness> {
    if expected.rows() != actual.rows() || expected.cols() != actual.cols() {
        return Some(Witness {
            location: format!("{context}: labels"),
            expected: format!("{}x{}", expected.nrows(), expected.ncols()),
            actual: format!("{}x{}", actual.nrows(), actual.ncols()),
        });
    }
    let (i, j) = expected.first_difference(actual)?;
    Some(Witness {
        location: format!(
            "{context}: row {}, column {}",
            expected.rows()[i],
            expected.cols()[j]
        ),
        expected: expected.get(i, j).to_string(),
        actual: actual.get(i, j).to_string(),
    })
}

fn compare_coeffs(location: String, expected: &Coeff, actual: &Coeff) -> Option<Witness> {
    (expected != actual).then(|| Witness {
        location,
        expected: expected.to_string(),
        actual: actual.to_string(),
    })
}

fn against_fixture(name: &str, actual: &QMatrix) -> Result<Option<Witness>> {
    let fix = fixture(name)?;
    Ok(compare_matrices(
        &format!("fixture {name}"),
        &fix.matrix()?,
        actual,
    ))
}

fn t(n: usize, a: Basis, b: Basis) -> QMatrix {
    (*transition_matrix(n, a, b)).clone()
}

/// Family transition against its closed formula and, at the printed size,
/// against the golden matrix.
fn family_check(n: usize, kind: FamilyKind, printed: Option<(usize, &str)>) -> Result<Check> {
    let m = family_transition(n, kind)?;
    let expected = expected_transition(n, kind).expect("formula exists");
    let mut check = Check::from_outcome(compare_matrices("closed formula", &expected, &m));
    if let Some((size, name)) = printed {
        if size == n {
            check = check.and(against_fixture(name, &m)?);
        }
    }
    check.matrix = Some(m);
    Ok(check)
}

fn pairing_example(n: usize) -> Result<Check> {
    if n != 5 {
        return Ok(Check::skip("defined for n = 5"));
    }
    let comp: Composition = "32".parse()?;
    let h = HeckeElement::word(5, &[2, 1, 1, 2, 4, 4]);
    let normalized = normalize(&comp, &h)?;
    let actual = normalized.scalar_product(&HeckeElement::word(5, &[1, 3]));
    let expected = &Coeff::from_int(2) * &Coeff::big_q().pow(2);
    Ok(Check::from_outcome(compare_coeffs(
        "(N_32(T2T1T1T2T4T4), T1T3)".into(),
        &expected,
        &actual,
    )))
}

fn car_check(n: usize) -> Result<Check> {
    let car = char_table(n, TableFamily::Zeta, TableMethod::Trace);
    let ups = char_table(n, TableFamily::Upsilon, TableMethod::Trace);
    let sign = Coeff::from_int(if n.is_multiple_of(2) { 1 } else { -1 });
    let signed_kostka = t(n, Basis::E, Basis::S).transpose().scale(&sign);
    let mut check = Check::from_outcome(compare_matrices("upsilon table", &signed_kostka, &ups));
    if n == 4 {
        check = check
            .and(against_fixture("car_4", &car)?)
            .and(against_fixture("car_upsilon_4", &ups)?);
    }
    check.matrix = Some(car);
    Ok(check)
}

fn car_factorization(n: usize) -> Result<Check> {
    let car = char_table(n, TableFamily::Zeta, TableMethod::Trace);
    let mut check = Check::from_outcome(compare_matrices(
        "factorization",
        &factored_char_table(n),
        &car,
    ));
    let classical = t(n, Basis::P, Basis::S).transpose();
    check = check.and(compare_matrices(
        "q = 1",
        &classical,
        &car.evaluate(&rat(1, 1))?,
    ));
    check.matrix = Some(car);
    Ok(check)
}

fn routes(n: usize) -> Result<Check> {
    let mut check = Check::default();
    for family in [TableFamily::Zeta, TableFamily::Upsilon] {
        let trace = char_table(n, family, TableMethod::Trace);
        let ram = char_table(n, family, TableMethod::Ram);
        check = check.and(compare_matrices(&format!("{family} tables"), &trace, &ram));
    }
    Ok(check)
}

fn fjchar(n: usize) -> Result<Check> {
    let chars = family_character_matrix(n, FamilyKind::Jones)?;
    let d1 = diagonal_matrix(n, DiagonalKind::D1);
    let p2s = t(n, Basis::P, Basis::S);
    let d2 = diagonal_matrix(n, DiagonalKind::D2);
    let mut check = Check::from_outcome(compare_matrices(
        "D1 P2S D2",
        &(&(&d1 * &p2s) * &d2),
        &chars,
    ));
    if n == 4 {
        check = check
            .and(against_fixture("fjchar_4", &chars)?)
            .and(against_fixture("fjchar_d1_4", &d1)?)
            .and(against_fixture("fjchar_p2s_4", &p2s)?)
            .and(against_fixture("d2_4", &d2)?);
    }
    check.matrix = Some(chars);
    Ok(check)
}

/// `prod_i q^{+-lambda_i(lambda_i-1)/2} [lambda_i]!`: trace of the sign-twisted
/// sum over the Young subgroup in its one-dimensional representation.
fn young_trace_diagonal(n: usize, kind: SignedKind) -> QMatrix {
    QMatrix::diagonal(n, |lambda| {
        let mut c = Coeff::one();
        for &k in lambda.iter() {
            let e = (k * (k - 1) / 2) as i32;
            c = &c * &Coeff::q_pow(if kind == SignedKind::Box { e } else { -e });
            for j in 1..=k {
                c = &c * &Coeff::qint(j as i32);
            }
        }
        c
    })
}

fn ncarre(n: usize) -> Result<Check> {
    let d2 = diagonal_matrix(n, DiagonalKind::D2);
    let h2s = t(n, Basis::H, Basis::S);
    let e2s = t(n, Basis::E, Basis::S);
    let boxes = family_character_matrix(n, FamilyKind::Box)?;
    let nablas = family_character_matrix(n, FamilyKind::Nabla)?;
    let parts = partitions(n);
    let raw = |kind| {
        QMatrix::from_fn(parts.clone(), parts.clone(), |i, j| {
            character(&parts[j], &signed_sum(&parts[i].as_composition(), kind))
        })
    };
    let raw_box = raw(SignedKind::Box);
    let raw_nabla = raw(SignedKind::Nabla);
    let box_diag = young_trace_diagonal(n, SignedKind::Box);
    let nabla_diag = young_trace_diagonal(n, SignedKind::Nabla);
    let mut check = Check::from_outcome(compare_matrices(
        "box family, H2S D2",
        &(&h2s * &d2),
        &boxes,
    ))
    .and(compare_matrices(
        "nabla family, E2S D2",
        &(&e2s * &d2),
        &nablas,
    ))
    .and(compare_matrices(
        "box elements",
        &(&box_diag * &h2s),
        &raw_box,
    ))
    .and(compare_matrices(
        "nabla elements",
        &(&nabla_diag * &e2s),
        &raw_nabla,
    ));
    if n == 4 {
        let fixed = |name: &str| -> Result<QMatrix> { fixture(name)?.matrix() };
        check = check
            .and(against_fixture("ncarre_h2s_4", &h2s)?)
            .and(against_fixture("ncarre_e2s_4", &e2s)?)
            .and(against_fixture("d2_4", &d2)?)
            .and(compare_matrices(
                "printed box family",
                &(&fixed("ncarre_h2s_4")? * &fixed("d2_4")?),
                &boxes,
            ))
            .and(compare_matrices(
                "printed nabla family",
                &(&fixed("ncarre_e2s_4")? * &fixed("d2_4")?),
                &nablas,
            ))
            .and(against_fixture("ncarre_box_diag_4", &box_diag)?)
            .and(against_fixture("ncarre_nabla_diag_4", &nabla_diag)?);
        let corrected = fixture("ncarre_box_diag_4")?.errata.len()
            + fixture("ncarre_nabla_diag_4")?.errata.len();
        check.note = Some(format!("{corrected} printed entries corrected"));
    }
    check.matrix = Some(boxes);
    Ok(check)
}

fn jm_gamma(n: usize) -> Result<Check> {
    let elementary = jm_elementary_all(n);
    let gr = geck_rouquier_basis(n)?;
    let mut check = Check::default();
    for (k, e) in elementary.iter().enumerate() {
        let mut expected = HeckeElement::zero(n);
        for (lambda, g) in &gr.elements {
            if lambda.len() == n - k {
                expected += g;
            }
        }
        if *e != expected {
            let coords = gamma_coordinates(e);
            let (idx, c) = coords
                .iter()
                .enumerate()
                .find(|(i, c)| **c != Coeff::from_int((gr.elements[*i].0.len() == n - k) as i64))
                .map(|(i, c)| (i, c.to_string()))
                .unwrap_or((0, "non-central".into()));
            check = check.and(Some(Witness {
                location: format!("e_{k} of x_2..x_n, Gamma coordinate {}", gr.elements[idx].0),
                expected: ((gr.elements[idx].0.len() == n - k) as i64).to_string(),
                actual: c,
            }));
        }
    }
    Ok(check)
}

fn ncsf(n: usize) -> Result<Check> {
    let comps = compositions(n);
    let mut check = Check::default();
    for j in &comps {
        for k in &comps {
            let polys = solomon_polynomials(j, k)?;
            if !polys.agree() {
                let fmt_poly = |p: &std::collections::BTreeMap<Vec<usize>, Coeff>| format!("{p:?}");
                let (a, b) = if polys.descent_pairing != polys.normalized_pairing {
                    (&polys.descent_pairing, &polys.normalized_pairing)
                } else {
                    (&polys.normalized_pairing, &polys.hook_coefficient)
                };
                check = check.and(Some(Witness {
                    location: format!("J = {j:?}, K = {k:?}"),
                    expected: fmt_poly(a),
                    actual: fmt_poly(b),
                }));
            }
        }
    }
    if n == 5 {
        let printed: [(&str, &[(&[usize], i64)]); 3] = [
            ("5", &[(&[2, 1], 1)]),
            ("41", &[(&[2, 0], 1), (&[1, 1], 1), (&[2, 1], 2)]),
            (
                "32",
                &[(&[1, 0], 1), (&[1, 1], 2), (&[2, 0], 1), (&[2, 1], 3)],
            ),
        ];
        let j: Composition = "32".parse()?;
        for (k, coeffs) in printed {
            let polys = solomon_polynomials(&j, &k.parse()?)?;
            let expected: std::collections::BTreeMap<Vec<usize>, Coeff> = coeffs
                .iter()
                .map(|(e, c)| (e.to_vec(), Coeff::from_int(*c)))
                .collect();
            if polys.hook_coefficient != expected {
                check = check.and(Some(Witness {
                    location: format!("coefficient of m_{k} for J = [3,2]"),
                    expected: format!("{expected:?}"),
                    actual: format!("{:?}", polys.hook_coefficient),
                }));
            }
        }
    }
    Ok(check)
}

fn yang(n: usize) -> Result<Check> {
    if n > 5 {
        return Ok(Check::skip("Gram matrix limited to n <= 5"));
    }
    let up: Vec<i64> = (1..=n as i64).collect();
    let down: Vec<i64> = up.iter().rev().copied().collect();
    let g = SymGroup::get(n);
    let mut check = Check::default();
    for v in [up, down] {
        let gram = yang_baxter_gram(&v)?;
        'outer: for (a, row) in gram.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                let expected = if a == b { Coeff::one() } else { Coeff::zero() };
                if *x != expected {
                    check = check.and(compare_coeffs(
                        format!("v = {v:?}, w = {}, w' = {}", g.perm(a), g.perm(b)),
                        &expected,
                        x,
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(check)
}

fn report_check(name: &str, ok: bool) -> Option<Witness> {
    (!ok).then(|| Witness {
        location: name.to_string(),
        expected: "true".into(),
        actual: "false".into(),
    })
}

fn diagram(n: usize) -> Result<Check> {
    let report = diagram_checks(n)?;
    Ok(Check::from_outcome(
        report
            .first_failure()
            .and_then(|name| report_check(name, false)),
    ))
}

fn characters(n: usize) -> Result<Check> {
    let report = character_matrix_checks(n)?;
    Ok(Check::from_outcome(
        report
            .first_failure()
            .and_then(|name| report_check(name, false)),
    ))
}

fn oracle(n: usize) -> Result<Check> {
    if n > 5 {
        return Ok(Check::skip("linear-system oracle limited to n <= 5"));
    }
    let q0 = rat(3, 2);
    let solved = gamma_oracle(n, &q0)?;
    let gr = geck_rouquier_basis(n)?;
    let mut check = Check::default();
    for ((lambda, a), (_, b)) in solved.iter().zip(&gr.elements) {
        let b = b.evaluate(&q0)?;
        if *a != b {
            check = check.and(Some(Witness {
                location: format!("Gamma_{lambda} at q = 3/2"),
                expected: a.to_string(),
                actual: b.to_string(),
            }));
        }
    }
    Ok(check)
}

fn phi_upsilon(n: usize) -> Result<Check> {
    let mut check = Check::default();
    for comp in compositions(n) {
        let phi = frobenius_phi(&upsilon(&comp));
        let h = SymmetricFunction::from_composition(Basis::H, &comp).to_basis(Basis::P);
        if phi != h {
            let lambda: Partition = partitions(n)
                .into_iter()
                .find(|l| phi.coeff(l) != h.coeff(l))
                .unwrap_or_else(|| comp.sorted());
            check = check.and(compare_coeffs(
                format!("Phi(Upsilon_{comp:?}) at p_{lambda}"),
                &h.coeff(&lambda),
                &phi.coeff(&lambda),
            ));
        }
    }
    Ok(check)
}

fn property(f: fn(usize) -> Outcome) -> impl Fn(usize) -> Result<Check> {
    move |n| Ok(Check::from_outcome(f(n)?))
}

type Runner = Box<dyn Fn(usize) -> Result<Check> + Send + Sync>;

/// Identifier and one-line description of every check, in run order.
pub const THEOREMS: &[(&str, &str)] = &[
    (
        "n1",
        "transition from N_lambda(1) to the Geck-Rouquier basis",
    ),
    (
        "ntomega",
        "transition from N_lambda(T_omega^2) to the Geck-Rouquier basis",
    ),
    (
        "jones",
        "transition from the Jones basis to the Geck-Rouquier basis",
    ),
    (
        "box",
        "transition from N_lambda(box_lambda) to the Geck-Rouquier basis",
    ),
    (
        "nabla",
        "transition from N_lambda(nabla_lambda) to the Geck-Rouquier basis",
    ),
    ("pairing-example", "(N_32(T2T1T1T2T4T4), T1T3) = 2Q^2"),
    ("car", "character tables of zeta and Upsilon"),
    (
        "car-factorization",
        "Car = P2S^tr D3 P2M D and its q = 1 specialization",
    ),
    (
        "routes",
        "trace and Frobenius routes give the same character tables",
    ),
    ("fjchar", "characters of the Jones basis are D1 P2S D2"),
    (
        "ncarre",
        "characters of the box and nabla elements and families",
    ),
    (
        "jm-gamma",
        "elementary functions of x_2..x_n in the Geck-Rouquier basis",
    ),
    (
        "ncsf",
        "descent pairings, normalized pairings and hook coefficients agree",
    ),
    ("yang", "Yang-Baxter Gram matrix is the identity"),
    ("braid", "quadratic, braid and commutation relations"),
    ("jm-commute", "Jucys-Murphy elements commute"),
    ("central", "all seven families are central"),
    (
        "francis",
        "Francis characterization of the Geck-Rouquier basis",
    ),
    (
        "scal-jm1",
        "(T_w, zeta_J T_w) against maximal coset representatives",
    ),
    (
        "scal-jm2",
        "normalized JM monomials paired with zeta_J count recoils",
    ),
    (
        "zero-hecke",
        "diagonal of left multiplication by zeta_J matches the 0-Hecke algebra",
    ),
    ("seminormal", "JM elements act diagonally by q^(2 content)"),
    ("dimension-squares", "sum of squared dimensions is n!"),
    (
        "solomon-module",
        "coset sums of E_J(z) expand in hook ribbons",
    ),
    ("ribbon", "ribbon concatenation identity"),
    ("diagram", "edges of the diagram of central bases"),
    ("characters", "character-matrix identities"),
    (
        "gamma-oracle",
        "Geck-Rouquier basis against an independent linear solve",
    ),
    ("phi-upsilon", "Frobenius image of Upsilon_J is h^J"),
];

fn runner(id: &str) -> Option<Runner> {
    let r: Runner = match id {
        "n1" => Box::new(|n| family_check(n, FamilyKind::N1, Some((4, "n1_4")))),
        "ntomega" => Box::new(|n| family_check(n, FamilyKind::NTomega, Some((5, "ntomega_5")))),
        "jones" => Box::new(|n| family_check(n, FamilyKind::Jones, Some((5, "jones_5")))),
        "box" => Box::new(|n| family_check(n, FamilyKind::Box, None)),
        "nabla" => Box::new(|n| family_check(n, FamilyKind::Nabla, None)),
        "pairing-example" => Box::new(pairing_example),
        "car" => Box::new(car_check),
        "car-factorization" => Box::new(car_factorization),
        "routes" => Box::new(routes),
        "fjchar" => Box::new(fjchar),
        "ncarre" => Box::new(ncarre),
        "jm-gamma" => Box::new(jm_gamma),
        "ncsf" => Box::new(ncsf),
        "yang" => Box::new(yang),
        "braid" => Box::new(property(properties::braid_quadratic)),
        "jm-commute" => Box::new(property(properties::jm_commute)),
        "central" => Box::new(property(properties::families_central)),
        "francis" => Box::new(property(properties::francis)),
        "scal-jm1" => Box::new(property(properties::scalar_zeta)),
        "scal-jm2" => Box::new(property(properties::normalized_monomials)),
        "zero-hecke" => Box::new(property(properties::zero_hecke)),
        "seminormal" => Box::new(property(properties::seminormal_diagonal)),
        "dimension-squares" => Box::new(property(properties::dimension_squares)),
        "solomon-module" => Box::new(property(properties::solomon_module)),
        "ribbon" => Box::new(property(properties::ribbon_concatenation)),
        "diagram" => Box::new(diagram),
        "characters" => Box::new(characters),
        "gamma-oracle" => Box::new(oracle),
        "phi-upsilon" => Box::new(phi_upsilon),
        _ => return None,
    };
    Some(r)
}

/// Run one named check at `n`.
pub fn verify(theorem: &str, n: usize) -> Result<VerificationReport> {
    let run = runner(theorem).ok_or_else(|| {
        let known: Vec<&str> = THEOREMS.iter().map(|(id, _)| *id).collect();
        Error::InvalidArgument(format!(
            "unknown theorem `{theorem}`; known: {}",
            known.join(", ")
        ))
    })?;
    if n == 0 || n > crate::combi::MAX_N {
        return Err(Error::TooLarge {
            n,
            max: crate::combi::MAX_N,
        });
    }
    let start = Instant::now();
    let check = run(n)?;
    let status = if check.skipped {
        Status::Skipped
    } else if check.witness.is_some() {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok(VerificationReport {
        theorem: theorem.to_string(),
        n,
        status,
        witness: check.witness,
        note: check.note,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        matrix: check.matrix,
    })
}

/// Every check of [`THEOREMS`] at `n`, in order.
pub fn verify_all(n: usize) -> Result<Vec<VerificationReport>> {
    THEOREMS.iter().map(|(id, _)| verify(id, n)).collect()
}
