use std::fmt::Write as _;

use threetypes_core::corpus;
use threetypes_core::crossed::{
    cat1_from_crossed_module, cat2_from_crossed_square, check_cat1, check_cat2,
    check_crossed_module, check_crossed_square, check_quadratic, check_two_crossed,
    crossed_module_from_cat1, crossed_square_from_cat2,
};
use threetypes_core::functors::{
    quadratic_from_simplicial, quadratic_from_square, quadratic_from_two_crossed,
    square_from_simplicial, two_crossed_from_simplicial, two_crossed_from_square,
    two_crossed_from_square_via_codiagonal,
};
use threetypes_core::group::describe;
use threetypes_core::homotopy::{
    homotopy_quadratic, homotopy_simplicial, homotopy_square, homotopy_two_crossed,
    signatures_isomorphic, HomotopySignature,
};
use threetypes_core::simplicial::{
    check_bisimplicial, check_simplicial, codiagonal, nerve_crossed_module,
};
use threetypes_core::{Group, Report};

use crate::error::{CliError, CliResult};
use crate::format::Structure;

pub const DEMOS: [&str; 7] = [
    "trivial-c2",
    "square-a3-s3",
    "square-c4-c2",
    "square-klein-diagonal",
    "xmod-a3-s3",
    "xmod-c4-c2",
    "nerve-a3-s3-depth3",
];

pub fn demo(name: &str) -> CliResult<Structure> {
    Ok(match name {
        "trivial-c2" => Structure::CrossedSquare(corpus::square_trivial_c2()),
        "square-a3-s3" => Structure::CrossedSquare(corpus::square_a3_s3()),
        "square-c4-c2" => Structure::CrossedSquare(corpus::square_c4_c2()),
        "square-klein-diagonal" => Structure::CrossedSquare(corpus::square_klein_diagonal()),
        "xmod-a3-s3" => Structure::CrossedModule(corpus::xmod_a3_s3()),
        "xmod-c4-c2" => Structure::CrossedModule(corpus::xmod_c4_c2()),
        "nerve-a3-s3-depth3" => Structure::Simplicial(corpus::nerve_a3_s3(3)),
        _ => {
            return Err(CliError::UnknownDemo {
                name: name.into(),
                available: DEMOS.to_vec(),
            })
        }
    })
}

/// Runs the checker for the structure's kind.
pub fn check(s: &Structure) -> Report {
    match s {
        Structure::CrossedModule(x) => check_crossed_module(x),
        Structure::CrossedSquare(x) => check_crossed_square(x),
        Structure::TwoCrossed(x) => check_two_crossed(x),
        Structure::Quadratic(x) => check_quadratic(x),
        Structure::Cat1(x) => check_cat1(x),
        Structure::Cat2(x) => check_cat2(x),
        Structure::Simplicial(x) => check_simplicial(x),
        Structure::Bisimplicial(x) => check_bisimplicial(x),
    }
}

/// Text of a report: every failing axiom with its count and first witness,
/// or all kept witnesses when `verbose`.
pub fn render_report(r: &Report, verbose: bool) -> String {
    if r.is_ok() {
        return "all axioms hold\n".into();
    }
    let mut out = String::new();
    for (axiom, count) in r.failing_axioms() {
        let _ = writeln!(out, "FAIL {axiom}: {count} violation(s)");
        let kept = r.violations().iter().filter(|v| v.axiom == axiom);
        for v in kept.take(if verbose { usize::MAX } else { 1 }) {
            let _ = writeln!(out, "  witness {:?}", v.witness);
        }
    }
    out
}

/// Refuses inputs that fail their own axioms.
fn require_valid(s: &Structure) -> CliResult<()> {
    let r = check(s);
    if r.is_ok() {
        return Ok(());
    }
    Err(CliError::Core(threetypes_core::Error::InvalidStructure(format!(
        "input {} fails its axioms:\n{}",
        s.kind(),
        render_report(&r, false).trim_end()
    ))))
}

pub fn convert(s: &Structure, to: &str) -> CliResult<Structure> {
    let unsupported = || CliError::UnsupportedConversion {
        from: s.kind().into(),
        to: to.into(),
    };
    if !crate::format::KINDS.contains(&to) {
        return Err(unsupported());
    }
    require_valid(s)?;
    Ok(match (s, to) {
        (Structure::CrossedSquare(x), "two_crossed") => {
            Structure::TwoCrossed(two_crossed_from_square(x))
        }
        (Structure::CrossedSquare(x), "quadratic") => {
            Structure::Quadratic(quadratic_from_square(x)?)
        }
        (Structure::CrossedSquare(x), "cat2") => Structure::Cat2(cat2_from_crossed_square(x)?),
        (Structure::Cat2(x), "crossed_square") => {
            Structure::CrossedSquare(crossed_square_from_cat2(x)?)
        }
        (Structure::TwoCrossed(x), "quadratic") => {
            Structure::Quadratic(quadratic_from_two_crossed(x)?)
        }
        (Structure::Simplicial(x), "crossed_square") => {
            Structure::CrossedSquare(square_from_simplicial(x)?)
        }
        (Structure::Simplicial(x), "two_crossed") => {
            Structure::TwoCrossed(two_crossed_from_simplicial(x)?)
        }
        (Structure::Simplicial(x), "quadratic") => {
            Structure::Quadratic(quadratic_from_simplicial(x)?)
        }
        (Structure::CrossedModule(x), "cat1") => Structure::Cat1(cat1_from_crossed_module(x)),
        (Structure::Cat1(x), "crossed_module") => {
            Structure::CrossedModule(crossed_module_from_cat1(x)?)
        }
        _ => return Err(unsupported()),
    })
}

pub fn homotopy(s: &Structure) -> CliResult<HomotopySignature> {
    require_valid(s)?;
    let from_xmod = |x| -> CliResult<HomotopySignature> {
        // the nerve has NG_2 = 1, so the depth-2 value of π3 is final
        let mut sig = homotopy_simplicial(&nerve_crossed_module(x, 2)?)?;
        sig.pi3_unquotiented = false;
        Ok(sig)
    };
    Ok(match s {
        Structure::CrossedModule(x) => from_xmod(x)?,
        Structure::Cat1(k) => from_xmod(&crossed_module_from_cat1(k)?)?,
        Structure::CrossedSquare(x) => homotopy_square(x)?,
        Structure::Cat2(k) => homotopy_square(&crossed_square_from_cat2(k)?)?,
        Structure::TwoCrossed(x) => homotopy_two_crossed(x)?,
        Structure::Quadratic(x) => homotopy_quadratic(x)?,
        Structure::Simplicial(x) => homotopy_simplicial(x)?,
        Structure::Bisimplicial(b) => homotopy_simplicial(&codiagonal(b)?)?,
    })
}

fn render_group(g: &Group) -> String {
    let shape = if g.is_abelian() { "abelian" } else { "nonabelian" };
    if g.order() == 1 {
        "1".into()
    } else if g.order() <= 16 && g.is_abelian() {
        format!("{} (order {}, {shape})", describe(g), g.order())
    } else {
        describe(g)
    }
}

pub fn render_signature(sig: &HomotopySignature) -> String {
    let mut out = String::new();
    for (i, g) in sig.groups().into_iter().enumerate() {
        let _ = writeln!(out, "π{} = {}", i + 1, render_group(g));
    }
    if sig.pi3_unquotiented {
        out.push_str("note: depth-2 input; π3 is ker ∂2 ∩ NG2 with nothing divided out\n");
    }
    out
}

/// Outcome of the diagram command: one line per route and per comparison.
pub struct DiagramReport {
    pub lines: Vec<String>,
    pub ok: bool,
}

/// Runs every route from a crossed square to a homotopy signature and
/// compares them.
pub fn diagram(s: &Structure, bound: usize) -> CliResult<DiagramReport> {
    let Structure::CrossedSquare(sq) = s else {
        return Err(CliError::UnsupportedConversion {
            from: s.kind().into(),
            to: "diagram (needs crossed_square)".into(),
        });
    };
    require_valid(s)?;
    let mut lines = Vec::new();
    let mut ok = true;
    let mut mark = |good: bool, text: String, lines: &mut Vec<String>| {
        ok &= good;
        lines.push(format!("{} {text}", if good { "ok  " } else { "FAIL" }));
    };

    let direct = two_crossed_from_square(sq);
    let via = two_crossed_from_square_via_codiagonal(sq)?;
    let composite = quadratic_from_two_crossed(&direct)?;
    let quadratic = quadratic_from_square(sq)?;
    mark(check_two_crossed(&direct).is_ok(), "direct mapping cone passes 2-crossed axioms".into(), &mut lines);
    mark(check_two_crossed(&via).is_ok(), "codiagonal mapping cone passes 2-crossed axioms".into(), &mut lines);
    mark(check_quadratic(&quadratic).is_ok(), "quadratic module passes its axioms".into(), &mut lines);
    mark(via == direct, "direct and codiagonal 2-crossed modules are equal element-wise".into(), &mut lines);
    mark(quadratic == composite, "quadratic functor equals the two-step composite".into(), &mut lines);

    let routes = [
        ("square", homotopy_square(sq)?),
        ("direct 2-crossed", homotopy_two_crossed(&direct)?),
        ("codiagonal 2-crossed", homotopy_two_crossed(&via)?),
        ("quadratic via composite", homotopy_quadratic(&quadratic)?),
    ];
    for (name, sig) in &routes {
        lines.push(format!("     route {name}: {sig}"));
    }
    for (name, sig) in &routes[1..] {
        let same = signatures_isomorphic(&routes[0].1, sig, bound)?;
        mark(same, format!("signature of {name} matches the square"), &mut lines);
    }
    Ok(DiagramReport { lines, ok })
}
