use std::fmt::Display;
use std::io::Write;

use serde_json::{json, Value};

use qpsum_core::combinat::{BlockOrder, Composition, MinRule, PartOrder, Partition, SetComposition};
use qpsum_core::fillings::{count_row_perms, enumerate_a, enumerate_ldd, enumerate_sd};
use qpsum_core::linear::{coeff_to_string, Basis, NcBasis, NcElement, QSymElement, SymBasis, SymElement};
use qpsum_core::verify::Suite;
use qpsum_core::{mn, ncqsym, qsym};

use crate::args::{BasisArgs, Command, FillingKind, Format, OrderArgs};

type Res<T> = Result<T, String>;

fn err(e: impl Display) -> String {
    e.to_string()
}

/// Runs one command, writing its report to `out`. Returns the exit code for
/// completed runs; domain errors come back as `Err`.
pub fn run(cmd: &Command, out: &mut Vec<u8>) -> Res<u8> {
    match cmd {
        Command::Expand { basis, index, to, to_order, format } => {
            let src = Source::parse(basis)?;
            let x = src.element(index)?;
            let y = retarget(x, to.as_deref(), to_order.as_deref(), &src)?;
            emit(out, &y, *format)?;
        }
        Command::Convert { input, to, to_order, format } => {
            let text = if let Some(path) = input.strip_prefix('@') {
                std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
            } else {
                input.clone()
            };
            let x = Element::from_json(&text)?;
            let src = x.source();
            let y = retarget(x, Some(to), to_order.as_deref(), &src)?;
            emit(out, &y, *format)?;
        }
        Command::Product { basis, left, right, to, format } => {
            let src = Source::parse(basis)?;
            let y = match (src.element(left)?, src.element(right)?) {
                (Element::Q(a), Element::Q(b)) => Element::Q(qsym::product(&a, &b).map_err(err)?),
                (Element::Nc(a), Element::Nc(b)) => {
                    // The shifted shuffle relabels the right factor from |a| + 1.
                    for x in [&a, &b] {
                        x.iter().try_for_each(|(phi, _)| require_standard(phi))?;
                    }
                    Element::Nc(ncqsym::product_nc(&a, &b).map_err(err)?)
                }
                _ => return Err(format!("products are not available in basis {}", basis.basis)),
            };
            let y = match to {
                Some(t) => retarget(y, Some(t), None, &src)?,
                None => y,
            };
            emit(out, &y, *format)?;
        }
        Command::Coproduct { basis, index, format } => {
            let src = Source::parse(basis)?;
            match src.element(index)? {
                Element::Q(x) => {
                    let t = qsym::coproduct(&x).map_err(err)?;
                    write_out(out, *format, &t, || serde_json::to_string(&t))?;
                }
                Element::Nc(x) => {
                    let t = ncqsym::coproduct_nc(&x).map_err(err)?;
                    write_out(out, *format, &t, || serde_json::to_string(&t))?;
                }
                Element::Sym(_) => return Err("coproducts are not available for symmetric bases".into()),
            }
        }
        Command::Fillings { kind, index, order, format } => fillings(out, *kind, index, order, *format)?,
        Command::Mnrule { index, format } => mnrule(out, index, *format)?,
        Command::Verify { suite, max_weight } => return verify(out, suite, *max_weight),
    }
    Ok(0)
}

enum Element {
    Q(QSymElement),
    Nc(NcElement),
    Sym(SymElement),
}

/// The basis an element came from, kept so conversions can inherit its order.
enum Source {
    Q(Basis),
    Nc(NcBasis),
    Sym(SymBasis),
}

impl Source {
    fn parse(args: &BasisArgs) -> Res<Source> {
        let order = read_order(&args.order)?;
        basis_from(&args.basis, order.as_deref(), None)
    }

    fn element(&self, index: &str) -> Res<Element> {
        Ok(match self {
            Source::Q(b) => Element::Q(QSymElement::basis_element(b.clone(), parse_composition(index)?)),
            Source::Nc(b) => Element::Nc(NcElement::basis_element(b.clone(), parse_set_composition(index)?)),
            Source::Sym(b) => Element::Sym(SymElement::basis_element(*b, parse_partition(index)?)),
        })
    }

    /// The part order a power-sum target inherits when none is given.
    fn part_order(&self) -> Option<PartOrder> {
        match self {
            Source::Q(b) => b.order().cloned(),
            Source::Nc(b) => b.order().map(|o| o.sizes.clone()),
            Source::Sym(_) => None,
        }
    }

    fn block_order(&self) -> Option<BlockOrder> {
        match self {
            Source::Nc(b) => b.order().cloned(),
            _ => None,
        }
    }
}

impl Element {
    fn from_json(text: &str) -> Res<Element> {
        let v: Value = serde_json::from_str(text).map_err(|e| format!("bad JSON element: {e}"))?;
        let tag = v.get("basis").and_then(Value::as_str).ok_or("JSON element has no \"basis\"")?;
        let bad = |e: serde_json::Error| format!("bad JSON element: {e}");
        Ok(match tag {
            "M_nc" | "P_nc" => Element::Nc(serde_json::from_value(v).map_err(bad)?),
            "sym-p" | "sym-m" => Element::Sym(serde_json::from_value(v).map_err(bad)?),
            _ => Element::Q(serde_json::from_value(v).map_err(bad)?),
        })
    }

    fn source(&self) -> Source {
        match self {
            Element::Q(x) => Source::Q(x.basis().clone()),
            Element::Nc(x) => Source::Nc(x.basis().clone()),
            Element::Sym(x) => Source::Sym(*x.basis()),
        }
    }
}

/// Parses a basis name. Orders default to `descending` for compositions and
/// `dtilde` for set compositions, unless `inherit` supplies one.
fn basis_from(name: &str, order: Option<&str>, inherit: Option<&Source>) -> Res<Source> {
    let part = |o: Option<&str>| -> Res<PartOrder> {
        match o {
            Some(s) => part_order(s),
            None => Ok(inherit.and_then(Source::part_order).unwrap_or_default()),
        }
    };
    let block = |o: Option<&str>| -> Res<BlockOrder> {
        match o {
            Some(s) => block_order(s),
            None => Ok(inherit.and_then(Source::block_order).unwrap_or_default()),
        }
    };
    Ok(match name {
        "M" => Source::Q(Basis::M),
        "F" => Source::Q(Basis::F),
        "P" => Source::Q(Basis::P(part(order)?)),
        "Ptilde" => Source::Q(Basis::Ptilde(part(order)?)),
        "M_nc" => Source::Nc(NcBasis::M),
        "P_nc" => Source::Nc(NcBasis::P(block(order)?)),
        "sym-p" => Source::Sym(SymBasis::P),
        "sym-m" => Source::Sym(SymBasis::M),
        _ => return Err(format!("unknown basis {name:?} (expected M, F, P, Ptilde, M_nc, P_nc, sym-p or sym-m)")),
    })
}

fn is_list(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace())
}

fn parse_list(s: &str) -> Res<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad integer {t:?}")))
        .collect()
}

fn part_order(s: &str) -> Res<PartOrder> {
    let s = s.trim();
    if is_list(s) {
        return PartOrder::ranked(parse_list(s)?).map_err(err);
    }
    if BlockOrder::parse(s).is_ok() {
        return Err(format!("{s} orders blocks; composition-indexed bases need descending, ascending or a ranking"));
    }
    PartOrder::parse(s).map_err(err)
}

fn block_order(s: &str) -> Res<BlockOrder> {
    let s = s.trim();
    if is_list(s) {
        let sizes = PartOrder::ranked(parse_list(s)?).map_err(err)?;
        return Ok(BlockOrder { sizes, ties: MinRule::SmallerMinFirst });
    }
    match s {
        "descending" => Ok(BlockOrder::dtilde()),
        "ascending" => Ok(BlockOrder::reverse_dtilde()),
        _ => BlockOrder::parse(s).map_err(err),
    }
}

fn read_order(args: &OrderArgs) -> Res<Option<String>> {
    if let Some(path) = &args.order_file {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(Some(text.trim().to_string()));
    }
    Ok(args.order.clone())
}

fn parse_composition(s: &str) -> Res<Composition> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Composition::empty());
    }
    let parts = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("malformed composition {s:?}")))
        .collect::<Res<Vec<_>>>()?;
    Composition::new(parts).map_err(err)
}

fn parse_partition(s: &str) -> Res<Partition> {
    Partition::new(parse_composition(s)?.into_parts()).map_err(err)
}

fn parse_set_composition(s: &str) -> Res<SetComposition> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(SetComposition::empty());
    }
    let blocks = s
        .split('/')
        .map(|b| {
            b.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| format!("malformed set composition {s:?}")))
                .collect::<Res<Vec<_>>>()
        })
        .collect::<Res<Vec<_>>>()?;
    SetComposition::new(blocks).map_err(err)
}

fn require_standard(phi: &SetComposition) -> Res<()> {
    if phi.is_standard() {
        Ok(())
    } else {
        Err(format!("set composition {} does not cover 1..{}", phi.compact(), phi.weight()))
    }
}

/// Expresses `x` in the basis named by `to`. Noncommutative elements sent to
/// a commutative basis are projected first; symmetric ones are included.
fn retarget(x: Element, to: Option<&str>, to_order: Option<&str>, src: &Source) -> Res<Element> {
    let target = match to {
        Some(name) => basis_from(name, to_order, Some(src))?,
        None => match &x {
            Element::Q(_) => Source::Q(Basis::M),
            Element::Nc(_) => Source::Nc(NcBasis::M),
            Element::Sym(_) => Source::Sym(SymBasis::M),
        },
    };
    Ok(match (x, target) {
        (Element::Q(x), Source::Q(b)) => Element::Q(qsym::convert(&x, &b).map_err(err)?),
        (Element::Nc(x), Source::Nc(b)) => Element::Nc(ncqsym::convert_nc(&x, &b)),
        (Element::Nc(x), Source::Q(b)) => Element::Q(qsym::convert(&ncqsym::project_rho(&x), &b).map_err(err)?),
        (Element::Sym(x), Source::Sym(SymBasis::M)) => Element::Sym(sym_to_m(&x)),
        (Element::Sym(x), Source::Q(b)) => {
            Element::Q(qsym::convert(&qsym::sym::to_qsym_m(&sym_to_m(&x)), &b).map_err(err)?)
        }
        (Element::Sym(_), Source::Sym(SymBasis::P)) => return Err("conversion into sym-p is not supported".into()),
        (Element::Q(_), _) | (Element::Sym(_), Source::Nc(_)) | (Element::Nc(_), Source::Sym(_)) => {
            return Err("no conversion between these algebras".into())
        }
    })
}

fn sym_to_m(x: &SymElement) -> SymElement {
    match x.basis() {
        SymBasis::M => x.clone(),
        SymBasis::P => x.map_linear(SymBasis::M, qsym::sym::p_to_m),
    }
}

fn write_out<T: Display>(
    out: &mut Vec<u8>,
    format: Format,
    x: &T,
    to_json: impl FnOnce() -> serde_json::Result<String>,
) -> Res<()> {
    let text = match format {
        Format::Text => x.to_string(),
        Format::Json => to_json().map_err(err)?,
    };
    writeln!(out, "{text}").map_err(err)
}

fn emit(out: &mut Vec<u8>, x: &Element, format: Format) -> Res<()> {
    match x {
        Element::Q(x) => write_out(out, format, x, || serde_json::to_string(x)),
        Element::Nc(x) => write_out(out, format, x, || serde_json::to_string(x)),
        Element::Sym(x) => write_out(out, format, x, || serde_json::to_string(x)),
    }
}

fn fillings(out: &mut Vec<u8>, kind: FillingKind, index: &str, order: &OrderArgs, format: Format) -> Res<()> {
    let order = read_order(order)?;
    // (text picture, JSON value, row-permutation count if relevant)
    let items: Vec<(String, Value, Option<String>)> = match kind {
        FillingKind::A => {
            let lambda = parse_partition(index)?;
            enumerate_a(&lambda)
                .into_iter()
                .map(|f| Ok((f.render(), serde_json::to_value(&f).map_err(err)?, None)))
                .collect::<Res<_>>()?
        }
        FillingKind::Sd => {
            let alpha = parse_composition(index)?;
            let ord = order.as_deref().map(part_order).transpose()?.unwrap_or_default();
            enumerate_sd(&alpha, &ord)
                .into_iter()
                .map(|f| {
                    let n = count_row_perms(&f).to_string();
                    Ok((f.render(), serde_json::to_value(&f).map_err(err)?, Some(n)))
                })
                .collect::<Res<_>>()?
        }
        FillingKind::Ldd => {
            let phi = parse_set_composition(index)?;
            let ord = order.as_deref().map(block_order).transpose()?.unwrap_or_default();
            enumerate_ldd(&phi, &ord)
                .into_iter()
                .map(|f| Ok((f.render(), serde_json::to_value(&f).map_err(err)?, None)))
                .collect::<Res<_>>()?
        }
    };
    match format {
        Format::Text => {
            let noun = if items.len() == 1 { "filling" } else { "fillings" };
            writeln!(out, "{} {noun}", items.len()).map_err(err)?;
            for (pic, _, perms) in &items {
                writeln!(out).map_err(err)?;
                if let Some(n) = perms {
                    writeln!(out, "row permutations: {n}").map_err(err)?;
                }
                write!(out, "{pic}").map_err(err)?;
            }
        }
        Format::Json => {
            let list: Vec<Value> = items
                .into_iter()
                .map(|(_, mut v, perms)| {
                    if let (Some(n), Some(obj)) = (perms, v.as_object_mut()) {
                        obj.insert("row_perms".into(), Value::String(n));
                    }
                    v
                })
                .collect();
            writeln!(out, "{}", Value::Array(list)).map_err(err)?;
        }
    }
    Ok(())
}

fn mnrule(out: &mut Vec<u8>, index: &str, format: Format) -> Res<()> {
    let alpha = parse_composition(index)?;
    let (lower, upper) = mn::interval_bounds(&alpha);
    let (expansion, terms) = mn::ribbon_expansion(&alpha).map_err(err)?;
    // Errors when the ribbon evaluation disagrees with the composite path.
    mn::p_to_f(&alpha).map_err(err)?;
    match format {
        Format::Text => {
            writeln!(out, "alpha = {alpha}, I(alpha) = {lower}, C(alpha) = {upper}").map_err(err)?;
            for t in &terms {
                writeln!(
                    out,
                    "\nbeta = {}: ht = {}, SDR = {}, coeff = {}",
                    t.beta,
                    t.height,
                    t.sdr,
                    coeff_to_string(&t.coeff())
                )
                .map_err(err)?;
                write!(out, "{}", t.tuple.render()).map_err(err)?;
            }
            writeln!(out, "\nP{alpha} = {expansion}").map_err(err)?;
        }
        Format::Json => {
            let terms: Vec<Value> = terms
                .iter()
                .map(|t| {
                    json!({
                        "beta": t.beta,
                        "height": t.height,
                        "sdr": t.sdr.to_string(),
                        "coeff": coeff_to_string(&t.coeff()),
                        "ribbons": t.tuple.ribbons(),
                    })
                })
                .collect();
            let v = json!({
                "alpha": alpha,
                "lower": lower,
                "upper": upper,
                "terms": terms,
                "expansion": expansion,
            });
            writeln!(out, "{v}").map_err(err)?;
        }
    }
    Ok(())
}

fn verify(out: &mut Vec<u8>, suite: &str, max_weight: usize) -> Res<u8> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        vec![Suite::parse(suite).ok_or_else(|| format!("unknown suite {suite:?} (one of {}, all)", names.join(", ")))?]
    };
    let mut code = 0;
    for s in suites {
        let report = s.run(max_weight);
        writeln!(out, "{report}").map_err(err)?;
        if let Some(first) = report.failures.first() {
            writeln!(out, "  first counterexample: {first}").map_err(err)?;
            code = 2;
        }
    }
    Ok(code)
}
