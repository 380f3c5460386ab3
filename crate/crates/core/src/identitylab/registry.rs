//! The identity inventory.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::model::{
    get, order, Assignment, Constraint, ConstraintOrigin, IdentityDescriptor, LhsKind, ParamKind, RhsKind, SideFn,
    TolKind,
};
use super::{section2 as s2, section3 as s3, section4 as s4};
use crate::error::{Error, Result};

use ParamKind::{Complex, PositiveInteger, Real};

const NZAS: &[(&str, ParamKind)] = &[("n", PositiveInteger), ("z", Complex), ("a", Complex), ("s", Complex)];
const NMAK: &[(&str, ParamKind)] = &[("n", PositiveInteger), ("m", Real), ("a", Complex), ("k", Complex)];
const YA: &[(&str, ParamKind)] = &[("y", Complex), ("a", Complex)];
const YAB: &[(&str, ParamKind)] = &[("y", Complex), ("a", Complex), ("b", Complex)];
const NMAKU: &[(&str, ParamKind)] =
    &[("n", PositiveInteger), ("m", Real), ("a", Complex), ("k", Complex), ("u", Real)];

/// Closest distance of `Phi` arguments to `z = 1` that the engine accepts.
const NEAR_ONE: f64 = 1e-6;
const DISC_SLACK: f64 = 1e-12;

fn stated(text: &'static str, check: fn(&Assignment) -> bool) -> Constraint {
    Constraint { text, origin: ConstraintOrigin::Stated, check }
}

fn engine(text: &'static str, check: fn(&Assignment) -> bool) -> Constraint {
    Constraint { text, origin: ConstraintOrigin::Engine, check }
}

fn off_lattice(a: Complex64) -> bool {
    !(a.im == 0.0 && a.re.fract() == 0.0)
}

fn in_disc(w: Complex64) -> bool {
    w.norm() <= 1.0 + DISC_SLACK && (w - 1.0).norm() >= NEAR_ONE
}

fn not_integer(p: &Assignment) -> bool {
    off_lattice(get(p, "a"))
}

fn not_integer_upper(p: &Assignment) -> bool {
    off_lattice(get(p, "a")) && get(p, "a").im >= 0.0
}

fn re_a_nonpositive(p: &Assignment) -> bool {
    get(p, "a").re <= 0.0
}

fn re_a_two_pi(p: &Assignment) -> bool {
    get(p, "a").re <= 2.0 * PI
}

fn re_a_minus_pi(p: &Assignment) -> bool {
    get(p, "a").re <= -PI
}

fn exp_minus_z(p: &Assignment) -> bool {
    in_disc((-get(p, "z")).exp())
}

fn minus_exp_z(p: &Assignment) -> bool {
    in_disc(-get(p, "z").exp())
}

fn minus_exp_minus_z(p: &Assignment) -> bool {
    in_disc(-(-get(p, "z")).exp())
}

fn minus_exp_iz(p: &Assignment) -> bool {
    in_disc(-(Complex64::i() * get(p, "z")).exp())
}

fn minus_exp_im(p: &Assignment) -> bool {
    in_disc(-Complex64::new(0.0, get(p, "m").re).exp())
}

fn order_positive(p: &Assignment) -> bool {
    order(p) >= 1
}

fn y_not_one(p: &Assignment) -> bool {
    (get(p, "y") - 1.0).norm() > 1e-8
}

fn abs_re_a_below_re_y(p: &Assignment) -> bool {
    get(p, "a").re.abs() < get(p, "y").re
}

fn mcclintoch_denominators(p: &Assignment) -> bool {
    let a = get(p, "a");
    [0.0, -1.0, -0.5].iter().all(|&r| (a - r).norm() > 1e-8)
}

fn ex4_4_stated(p: &Assignment) -> bool {
    get(p, "k").re > 0.0 && get(p, "u").re > order(p) as f64 && get(p, "a").re > PI
}

fn ex4_4_bases(p: &Assignment) -> bool {
    let (n, a) = (order(p) as i64, get(p, "a"));
    (-n..=n).all(|t| (a + t as f64).norm() > 1.0)
}

fn ex4_4_smooth(p: &Assignment) -> bool {
    get(p, "u").re >= 1.0
}

const SECTION2_BRANCH: &str = "principal branch: powers as exp(s log w), (-1)^w = exp(i pi w)";

struct Spec2 {
    id: &'static str,
    anchor: &'static str,
    stated: Option<(&'static str, fn(&Assignment) -> bool)>,
    disc: (&'static str, fn(&Assignment) -> bool),
    min_order: u32,
    lhs: SideFn,
    rhs: SideFn,
    notes: &'static [&'static str],
}

const A_NOT_Z: &str = "a\\neq \\mathbb{Z}";
const A_NOT_Z_UPPER: &str = "a\\neq \\mathbb{Z},Im(a)\\geq 0";
const RE_A_MINUS_PI: &str = "Re(a)\\leq -\\pi";
const DISC_E_MINUS_Z: &str = "|e^{-z}| <= 1 and e^{-z} != 1";
const DISC_MINUS_E_Z: &str = "|e^{z}| <= 1 and -e^{z} != 1";
const DISC_MINUS_E_MINUS_Z: &str = "|e^{-z}| <= 1 and -e^{-z} != 1";

fn section2() -> Vec<IdentityDescriptor> {
    let specs = [
        Spec2 {
            id: "ex2_1",
            anchor: "From equation (10.33.16)",
            stated: None,
            disc: ("-e^{im} != 1", minus_exp_im),
            min_order: 0,
            lhs: s2::lhs_2_1,
            rhs: s2::rhs_2_1,
            notes: &[SECTION2_BRANCH],
        },
        Spec2 {
            id: "ex2_2",
            anchor: "From equation (10.33.17)",
            stated: Some((A_NOT_Z, not_integer)),
            disc: (DISC_E_MINUS_Z, exp_minus_z),
            min_order: 0,
            lhs: s2::lhs_2_2,
            rhs: s2::rhs_2_2,
            notes: &[SECTION2_BRANCH, "a\\neq \\mathbb{Z} is read as: a is not an integer"],
        },
        Spec2 {
            id: "ex2_3",
            anchor: "From equation (10.33.18)",
            stated: Some((A_NOT_Z_UPPER, not_integer_upper)),
            disc: (DISC_E_MINUS_Z, exp_minus_z),
            min_order: 0,
            lhs: s2::lhs_2_3,
            rhs: s2::rhs_2_3,
            notes: &[SECTION2_BRANCH],
        },
        Spec2 {
            id: "ex2_4",
            anchor: "From equation (10.33.20)",
            stated: Some((A_NOT_Z_UPPER, not_integer_upper)),
            disc: (DISC_MINUS_E_Z, minus_exp_z),
            min_order: 0,
            lhs: s2::lhs_2_4,
            rhs: s2::rhs_2_4,
            notes: &[SECTION2_BRANCH],
        },
        Spec2 {
            id: "ex2_5",
            anchor: "From equation (10.34.15)",
            stated: None,
            disc: ("|e^{iz}| <= 1 and -e^{iz} != 1", minus_exp_iz),
            min_order: 1,
            lhs: s2::lhs_2_5,
            rhs: s2::rhs_2_5,
            notes: &[SECTION2_BRANCH, "the two displayed lines carry no '='; read as an equality"],
        },
        Spec2 {
            id: "ex2_6",
            anchor: "From equation (10.34.16)",
            stated: Some(("Re(a)\\leq 0", re_a_nonpositive)),
            disc: (DISC_E_MINUS_Z, exp_minus_z),
            min_order: 1,
            lhs: s2::lhs_2_6,
            rhs: s2::rhs_2_6,
            notes: &[SECTION2_BRANCH],
        },
        Spec2 {
            id: "ex2_7",
            anchor: "From equation (10.34.17)",
            stated: Some(("Re(a)\\leq 2\\pi", re_a_two_pi)),
            disc: (DISC_E_MINUS_Z, exp_minus_z),
            min_order: 1,
            lhs: s2::lhs_2_7,
            rhs: s2::rhs_2_7,
            notes: &[SECTION2_BRANCH, "sampled inside and just outside the stated region"],
        },
        Spec2 {
            id: "ex2_8",
            anchor: "From equation (10.34.20)",
            stated: Some((RE_A_MINUS_PI, re_a_minus_pi)),
            disc: (DISC_MINUS_E_MINUS_Z, minus_exp_minus_z),
            min_order: 1,
            lhs: s2::lhs_2_8,
            rhs: s2::rhs_2_8,
            notes: &[SECTION2_BRANCH],
        },
        Spec2 {
            id: "ex2_9",
            anchor: "From equation (10.27.7)",
            stated: None,
            disc: (DISC_MINUS_E_MINUS_Z, minus_exp_minus_z),
            min_order: 0,
            lhs: s2::lhs_2_9,
            rhs: s2::rhs_2_9,
            notes: &[SECTION2_BRANCH, "e^{i(j+3p)pi} and e^{2in pi} are taken as the exact integers they equal"],
        },
        Spec2 {
            id: "ex2_10",
            anchor: "From equation (10.27.8)",
            stated: Some((A_NOT_Z, not_integer)),
            disc: (DISC_MINUS_E_Z, minus_exp_z),
            min_order: 1,
            lhs: s2::lhs_2_10,
            rhs: s2::rhs_2_10,
            notes: &[SECTION2_BRANCH, "the outer sum runs to n-1, so n = 0 is the empty identity 0 = 0"],
        },
        Spec2 {
            id: "ex2_11",
            anchor: "From equation (10.27.9)",
            stated: None,
            disc: (DISC_E_MINUS_Z, exp_minus_z),
            min_order: 0,
            lhs: s2::lhs_2_11,
            rhs: s2::rhs_2_11,
            notes: &[SECTION2_BRANCH],
        },
        Spec2 {
            id: "ex2_12",
            anchor: "From equation (10.27.10)",
            stated: Some((RE_A_MINUS_PI, re_a_minus_pi)),
            disc: (DISC_E_MINUS_Z, exp_minus_z),
            min_order: 0,
            lhs: s2::lhs_2_12,
            rhs: s2::rhs_2_12,
            notes: &[SECTION2_BRANCH, "sampled inside and just outside the stated region"],
        },
        Spec2 {
            id: "ex2_13",
            anchor: "From equation (10.27.12)",
            stated: Some((RE_A_MINUS_PI, re_a_minus_pi)),
            disc: (DISC_MINUS_E_MINUS_Z, minus_exp_minus_z),
            min_order: 0,
            lhs: s2::lhs_2_13,
            rhs: s2::rhs_2_13,
            notes: &[SECTION2_BRANCH],
        },
    ];
    specs
        .into_iter()
        .map(|sp| {
            let mut constraints = Vec::new();
            if let Some((text, check)) = sp.stated {
                constraints.push(stated(text, check));
            }
            constraints.push(engine(sp.disc.0, sp.disc.1));
            if sp.min_order == 1 {
                constraints.push(engine("n >= 1", order_positive));
            }
            IdentityDescriptor {
                id: sp.id,
                anchor: sp.anchor,
                params: if sp.id == "ex2_1" { NMAK } else { NZAS },
                constraints,
                lhs_kind: LhsKind::DoubleSum,
                rhs_kind: RhsKind::PhiCombination,
                default_tol: 1e-10,
                tol_kind: TolKind::Relative,
                min_order: sp.min_order,
                branch_sensitive: false,
                notes: sp.notes,
                lhs: sp.lhs,
                rhs: sp.rhs,
            }
        })
        .collect()
}

const SECTION3_REGION: &str = "|Re(a)| < Re(y)";
const SECTION3_NOTES: &[&str] = &["divergent samples (term ratio limit >= 1) are rejected at run time"];
const SECTION3_B_NOTES: &[&str] = &[
    "divergent samples (term ratio limit >= 1) are rejected at run time",
    "b is a free complex parameter; sampled with Re(b) in (0, 3)",
];

fn section3() -> Vec<IdentityDescriptor> {
    let rows: [(&str, &str, &[(&str, ParamKind)], SideFn, SideFn); 5] = [
        ("ex3_1", "From equation (10.49.26)", YA, s3::lhs_3_1, s3::rhs_3_1),
        (
            "ex3_2",
            "\\sum _{k=1}^{\\infty } \\frac{\\left((-1+y) y^{-1-a}\\right)^k \\Gamma ((1+a) k)}{(k+2)!",
            YA,
            s3::lhs_3_2,
            s3::rhs_3_2,
        ),
        ("ex3_3", "From equation (10.49.27)", YAB, s3::lhs_3_3, s3::rhs_3_3),
        ("ex3_4", "From equation (10.49.28)", YAB, s3::lhs_3_4, s3::rhs_3_4),
        ("ex3_5", "From equation (10.49.29)", YAB, s3::lhs_3_5, s3::rhs_3_5),
    ];
    rows.into_iter()
        .map(|(id, anchor, params, lhs, rhs)| {
            let mut constraints =
                vec![stated(SECTION3_REGION, abs_re_a_below_re_y), engine("y != 1", y_not_one)];
            if params.len() == 2 {
                constraints.push(engine("a not in {0, -1, -1/2}", mcclintoch_denominators));
            }
            IdentityDescriptor {
                id,
                anchor,
                params,
                constraints,
                lhs_kind: LhsKind::InfiniteSeries,
                rhs_kind: RhsKind::ElementaryClosedForm,
                default_tol: 1e-10,
                tol_kind: TolKind::Relative,
                min_order: 0,
                branch_sensitive: false,
                notes: if params.len() == 2 { SECTION3_NOTES } else { SECTION3_B_NOTES },
                lhs,
                rhs,
            }
        })
        .collect()
}

const LOG_NOTES: &[&str] = &["log(-x) read as ln x +- i pi, log(ix) as ln x +- i pi/2; plus is canonical"];

fn section4() -> Vec<IdentityDescriptor> {
    let logs: [(&str, &str, SideFn, SideFn); 3] = [
        ("ex4_1", "where $A$ is Glaisher's constant", s4::lhs_4_1, s4::rhs_4_1),
        ("ex4_2", "where $\\zeta(3)$ is Ap\\'{e}ry's constant", s4::lhs_4_2, s4::rhs_4_2),
        ("ex4_3", "where $C$ is Catalan's constant", s4::lhs_4_3, s4::rhs_4_3),
    ];
    let mut out: Vec<IdentityDescriptor> = logs
        .into_iter()
        .map(|(id, anchor, lhs, rhs)| IdentityDescriptor {
            id,
            anchor,
            params: &[],
            constraints: Vec::new(),
            lhs_kind: LhsKind::Integral,
            rhs_kind: RhsKind::ConstantExpression,
            default_tol: 1e-8,
            tol_kind: TolKind::Absolute,
            min_order: 0,
            branch_sensitive: true,
            notes: LOG_NOTES,
            lhs,
            rhs,
        })
        .collect();
    out.push(IdentityDescriptor {
        id: "ex4_4",
        anchor: "From equation (\\ref{103316})",
        params: NMAKU,
        constraints: vec![
            stated("Re(k)>0,Re(u)>Re(n),Re(a)>\\pi", ex4_4_stated),
            engine("|a+j-p| > 1 for every term (2F1 series converges)", ex4_4_bases),
            engine("u >= 1 (smooth integrand for Gauss-Legendre)", ex4_4_smooth),
            engine("-e^{im} != 1", minus_exp_im),
        ],
        lhs_kind: LhsKind::DoubleSum,
        rhs_kind: RhsKind::PhiIntegral,
        default_tol: 1e-8,
        tol_kind: TolKind::Relative,
        min_order: 0,
        branch_sensitive: false,
        notes: &["Re(u)>Re(n) is read as u > n with u real", SECTION2_BRANCH],
        lhs: s4::lhs_4_4,
        rhs: s4::rhs_4_4,
    });
    out
}

/// All 22 identities in their published order.
pub fn list_identities() -> &'static [IdentityDescriptor] {
    static ALL: OnceLock<Vec<IdentityDescriptor>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut all = section2();
        all.extend(section3());
        all.extend(section4());
        all
    })
}

pub fn descriptor(id: &str) -> Result<&'static IdentityDescriptor> {
    list_identities()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}
