//! Versioned JSON key and ciphertext files.
//!
//! Permutations are stored in one-line form (`images[i]` is the image of
//! `i`) and tables row-major. Numeric arrays are written on a single line,
//! arrays of arrays one element per line.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use qgelgamal::codec::CodecConfig;
use qgelgamal::{Ciphertext, Exponents, Isotopy, Leader, Permutation, PrivateKey, PublicKey, Quasigroup, SymbolString};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PublicKeyFile {
    pub version: u32,
    pub order: usize,
    pub quasigroup: Vec<Vec<usize>>,
    pub isotopy: [Vec<usize>; 3],
    pub isotopy_pow: [Vec<usize>; 3],
    pub leader: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrivateKeyFile {
    pub version: u32,
    pub m: u64,
    pub n: u64,
    pub k: u64,
}

/// How the ciphertext body maps back to output bytes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Codec {
    /// Body symbols are the plaintext symbols themselves.
    Raw,
    /// Body decodes to bytes, `width` base-`order` digits per byte.
    Bytes { order: usize, width: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CiphertextFile {
    pub version: u32,
    pub ephemeral: [Vec<usize>; 3],
    pub body: Vec<usize>,
    pub codec: Codec,
}

fn isotopy_images(t: &Isotopy) -> [Vec<usize>; 3] {
    t.components().map(|p| p.images().to_vec())
}

fn isotopy_from_images(what: &str, order: usize, images: &[Vec<usize>; 3]) -> Result<Isotopy, CliError> {
    let mut perms = Vec::with_capacity(3);
    for (name, imgs) in ["alpha", "beta", "gamma"].iter().zip(images) {
        if imgs.len() != order {
            return Err(CliError::invalid(
                what,
                format!("{name} has degree {}, expected {order}", imgs.len()),
            ));
        }
        let p = Permutation::from_images(imgs.clone())
            .map_err(|e| CliError::invalid(what, format!("{name}: {e}")))?;
        perms.push(p);
    }
    let gamma = perms.pop().unwrap();
    let beta = perms.pop().unwrap();
    let alpha = perms.pop().unwrap();
    Isotopy::new(alpha, beta, gamma).map_err(|e| CliError::invalid(what, e))
}

fn check_version(what: &str, version: u32) -> Result<(), CliError> {
    if version != FORMAT_VERSION {
        return Err(CliError::invalid(
            what,
            format!("unsupported version {version}, expected {FORMAT_VERSION}"),
        ));
    }
    Ok(())
}

impl PublicKeyFile {
    pub fn from_key(key: &PublicKey) -> Self {
        Self {
            version: FORMAT_VERSION,
            order: key.order(),
            quasigroup: key.quasigroup().to_rows(),
            isotopy: isotopy_images(key.base_isotopy()),
            isotopy_pow: isotopy_images(key.powered_isotopy()),
            leader: key.leader().0,
        }
    }

    pub fn to_key(&self) -> Result<PublicKey, CliError> {
        const WHAT: &str = "public key";
        check_version(WHAT, self.version)?;
        if self.quasigroup.len() != self.order {
            return Err(CliError::invalid(
                WHAT,
                format!("quasigroup has {} rows, order is {}", self.quasigroup.len(), self.order),
            ));
        }
        let q = Quasigroup::from_rows(&self.quasigroup).map_err(|e| CliError::invalid(WHAT, format!("quasigroup: {e}")))?;
        let base = isotopy_from_images("public key isotopy", self.order, &self.isotopy)?;
        let pow = isotopy_from_images("public key isotopy_pow", self.order, &self.isotopy_pow)?;
        PublicKey::new(q, base, pow, Leader(self.leader)).map_err(|e| CliError::invalid(WHAT, e))
    }
}

impl PrivateKeyFile {
    pub fn from_key(key: &PrivateKey) -> Self {
        let (m, n, k) = key.get();
        Self {
            version: FORMAT_VERSION,
            m,
            n,
            k,
        }
    }

    pub fn to_key(&self) -> Result<PrivateKey, CliError> {
        check_version("private key", self.version)?;
        Exponents::new(self.m, self.n, self.k).map_err(|e| CliError::invalid("private key", e))
    }
}

impl CiphertextFile {
    pub fn from_ciphertext(ct: &Ciphertext, codec: Codec) -> Self {
        Self {
            version: FORMAT_VERSION,
            ephemeral: isotopy_images(ct.ephemeral_isotopy()),
            body: ct.body().symbols().to_vec(),
            codec,
        }
    }

    /// Rebuilds the ciphertext for a key of the given order.
    pub fn to_ciphertext(&self, order: usize) -> Result<Ciphertext, CliError> {
        const WHAT: &str = "ciphertext";
        check_version(WHAT, self.version)?;
        if let Codec::Bytes { order: o, width } = self.codec {
            let expected = CodecConfig::new(o).map_err(|e| CliError::invalid(WHAT, e))?;
            if o != order || width != expected.width() {
                return Err(CliError::invalid(
                    WHAT,
                    format!("codec order {o} width {width} does not fit a key of order {order}"),
                ));
            }
        }
        let eph = isotopy_from_images("ciphertext ephemeral", order, &self.ephemeral)?;
        let body = SymbolString::new(order, self.body.clone()).map_err(|e| CliError::invalid(WHAT, e))?;
        Ciphertext::new(eph, body).map_err(|e| CliError::invalid(WHAT, e))
    }
}

/// JSON text with numeric arrays kept on one line.
pub fn to_json_text<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("file types serialize to JSON");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match value {
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_value(out, v, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        Value::Array(items) if items.iter().any(|v| v.is_array() || v.is_object()) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, v, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        Value::Array(items) => {
            out.push('[');
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&v.to_string());
            }
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    fs::write(path, to_json_text(value)).map_err(|e| CliError::io(path, e))
}

pub fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::invalid(what, e))
}
