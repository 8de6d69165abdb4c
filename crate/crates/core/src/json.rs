//! JSON encodings of indices, elements and tensors.
//!
//! Elements look like
//! `{"basis":"P","order":"descending","terms":[{"index":[1,2,1,1],"coeff":"-3"}]}`.
//! Coefficients are strings (`"p/q"` or an integer); key order is fixed.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::{BlockOrder, Composition, PartOrder, Partition, SetComposition};
use crate::linear::{coeff_to_string, parse_coeff, Basis, FormalSum, Index, NcBasis, SymBasis, TensorSum};

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Composition::new(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Partition::new(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for SetComposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.blocks().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetComposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        SetComposition::new(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// Basis tags with their JSON names and optional order strings.
pub trait JsonBasis: Sized {
    fn tag(&self) -> &'static str;
    fn order_name(&self) -> Option<String>;
    fn from_parts(tag: &str, order: Option<&str>) -> Result<Self, String>;
}

impl JsonBasis for Basis {
    fn tag(&self) -> &'static str {
        Basis::tag(self)
    }

    fn order_name(&self) -> Option<String> {
        self.order().map(PartOrder::name)
    }

    fn from_parts(tag: &str, order: Option<&str>) -> Result<Self, String> {
        let order = || -> Result<PartOrder, String> {
            PartOrder::parse(order.unwrap_or("descending")).map_err(|e| e.to_string())
        };
        match tag {
            "M" => Ok(Basis::M),
            "F" => Ok(Basis::F),
            "P" => Ok(Basis::P(order()?)),
            "Ptilde" => Ok(Basis::Ptilde(order()?)),
            _ => Err(format!("unknown QSym basis {tag:?}")),
        }
    }
}

impl JsonBasis for NcBasis {
    fn tag(&self) -> &'static str {
        NcBasis::tag(self)
    }

    fn order_name(&self) -> Option<String> {
        self.order().map(BlockOrder::name)
    }

    fn from_parts(tag: &str, order: Option<&str>) -> Result<Self, String> {
        match tag {
            "M_nc" => Ok(NcBasis::M),
            "P_nc" => Ok(NcBasis::P(BlockOrder::parse(order.unwrap_or("dtilde")).map_err(|e| e.to_string())?)),
            _ => Err(format!("unknown NCQSym basis {tag:?}")),
        }
    }
}

impl JsonBasis for SymBasis {
    fn tag(&self) -> &'static str {
        match self {
            SymBasis::P => "sym-p",
            SymBasis::M => "sym-m",
        }
    }

    fn order_name(&self) -> Option<String> {
        None
    }

    fn from_parts(tag: &str, _: Option<&str>) -> Result<Self, String> {
        match tag {
            "sym-p" => Ok(SymBasis::P),
            "sym-m" => Ok(SymBasis::M),
            _ => Err(format!("unknown Sym basis {tag:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson<I> {
    index: I,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson<I> {
    basis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    order: Option<String>,
    terms: Vec<TermJson<I>>,
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson<I> {
    left: I,
    right: I,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TensorJson<I> {
    basis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    order: Option<String>,
    terms: Vec<TensorTermJson<I>>,
}

impl<I, B> Serialize for FormalSum<I, B>
where
    I: Index + Serialize,
    B: JsonBasis + Clone + PartialEq,
{
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            basis: self.basis().tag().to_string(),
            order: self.basis().order_name(),
            terms: self.iter().map(|(i, c)| TermJson { index: i, coeff: coeff_to_string(c) }).collect(),
        }
        .serialize(s)
    }
}

impl<'de, I, B> Deserialize<'de> for FormalSum<I, B>
where
    I: Index + Deserialize<'de>,
    B: JsonBasis + Clone + PartialEq,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ElementJson::<I>::deserialize(d)?;
        let basis = B::from_parts(&raw.basis, raw.order.as_deref()).map_err(D::Error::custom)?;
        let mut out = FormalSum::zero(basis);
        for t in raw.terms {
            let c = parse_coeff(&t.coeff).ok_or_else(|| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            out.add_term(t.index, c);
        }
        Ok(out)
    }
}

impl<I, B> Serialize for TensorSum<I, B>
where
    I: Index + Serialize,
    B: JsonBasis + Clone + PartialEq,
{
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TensorJson {
            basis: self.basis().tag().to_string(),
            order: self.basis().order_name(),
            terms: self
                .terms()
                .iter()
                .map(|((l, r), c)| TensorTermJson { left: l, right: r, coeff: coeff_to_string(c) })
                .collect(),
        }
        .serialize(s)
    }
}
