use std::fs;
use std::io::Write;
use std::path::Path;

use qgelgamal::codec::CodecConfig;
use qgelgamal::{scheme, Exponents, PublicKey, Residue, SymbolString};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::CliError;
use crate::files::{self, CiphertextFile, Codec, PrivateKeyFile, PublicKeyFile};

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 256;

/// Where the ephemeral exponents of an encryption come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ephemeral {
    Seed(u64),
    Explicit(Exponents),
    Entropy,
}

fn rng_for(seed: Option<u64>) -> ChaCha20Rng {
    match seed {
        Some(s) => ChaCha20Rng::seed_from_u64(s),
        None => ChaCha20Rng::from_rng(rand::thread_rng()).expect("thread rng does not fail"),
    }
}

pub fn load_public(path: &Path) -> Result<PublicKey, CliError> {
    files::read_json::<PublicKeyFile>(path, "public key")?.to_key()
}

pub fn keygen(order: usize, seed: Option<u64>, out_pub: &Path, out_priv: &Path) -> Result<(), CliError> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
        return Err(CliError::Usage(format!(
            "order must be in {MIN_ORDER}..={MAX_ORDER}, got {order}"
        )));
    }
    let (public, private) = scheme::keygen_random(order, &mut rng_for(seed))
        .map_err(|e| CliError::invalid("key generation", e))?;
    files::write_json(out_pub, &PublicKeyFile::from_key(&public))?;
    files::write_json(out_priv, &PrivateKeyFile::from_key(&private))
}

/// Parses `r,s,t`.
pub fn parse_exponents(text: &str) -> Result<Exponents, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        return Err(format!("expected three comma-separated integers, got {text:?}"));
    };
    let num = |s: &str| s.parse::<u64>().map_err(|e| format!("{s:?}: {e}"));
    Exponents::new(num(a)?, num(b)?, num(c)?).map_err(|e| e.to_string())
}

/// Integers separated by whitespace and/or commas.
pub fn parse_raw_symbols(text: &str, order: usize) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let s: usize = t
                .parse()
                .map_err(|_| CliError::invalid("raw symbols", format!("{t:?} is not an integer")))?;
            if s >= order {
                return Err(CliError::invalid(
                    "raw symbols",
                    format!("symbol {s} outside alphabet of order {order}"),
                ));
            }
            Ok(s)
        })
        .collect()
}

pub fn format_raw_symbols(symbols: &[usize]) -> String {
    if symbols.is_empty() {
        return String::new();
    }
    let mut out = symbols.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}

pub fn encrypt(
    pub_path: &Path,
    in_path: &Path,
    out_path: &Path,
    ephemeral: Ephemeral,
    raw_symbols: bool,
) -> Result<(), CliError> {
    let public = load_public(pub_path)?;
    let order = public.order();
    let input = fs::read(in_path).map_err(|e| CliError::io(in_path, e))?;
    let (symbols, codec) = if raw_symbols {
        let text = String::from_utf8(input).map_err(|e| CliError::invalid("raw symbols", e))?;
        (parse_raw_symbols(&text, order)?, Codec::Raw)
    } else {
        let cfg = CodecConfig::new(order).map_err(|e| CliError::invalid("public key", e))?;
        (
            cfg.encode(&input),
            Codec::Bytes {
                order,
                width: cfg.width(),
            },
        )
    };
    let plain = SymbolString::new(order, symbols).map_err(|e| CliError::invalid("plaintext", e))?;
    let ct = match ephemeral {
        Ephemeral::Explicit(eph) => scheme::encrypt(&public, &plain, &eph),
        Ephemeral::Seed(s) => scheme::encrypt_random(&public, &plain, &mut rng_for(Some(s))),
        Ephemeral::Entropy => scheme::encrypt_random(&public, &plain, &mut rng_for(None)),
    }
    .map_err(|e| CliError::invalid("encryption", e))?;
    files::write_json(out_path, &CiphertextFile::from_ciphertext(&ct, codec))
}

pub fn decrypt(pub_path: &Path, priv_path: &Path, in_path: &Path, out_path: &Path) -> Result<(), CliError> {
    let public = load_public(pub_path)?;
    let private = files::read_json::<PrivateKeyFile>(priv_path, "private key")?.to_key()?;
    let file: CiphertextFile = files::read_json(in_path, "ciphertext")?;
    let ct = file.to_ciphertext(public.order())?;
    let plain = scheme::decrypt(&public, &private, &ct).map_err(|e| CliError::invalid("decryption", e))?;
    let bytes = match file.codec {
        Codec::Raw => format_raw_symbols(plain.symbols()).into_bytes(),
        Codec::Bytes { order, .. } => CodecConfig::new(order)
            .and_then(|cfg| cfg.decode(plain.symbols()))
            .map_err(|e| CliError::invalid("decrypted stream", e))?,
    };
    fs::write(out_path, bytes).map_err(|e| CliError::io(out_path, e))
}

/// Private exponents recovered from a public key, one residue class per
/// isotopy component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttackReport {
    pub residues: [Residue; 3],
}

/// Recovers `(m, n, k)` modulo the orders of `α, β, γ` by solving the
/// discrete logarithm of each component of `T^(m,n,k)`, then checks that
/// the residues reproduce it.
pub fn attack(public: &PublicKey) -> Result<AttackReport, CliError> {
    let base = public.base_isotopy().components();
    let powered = public.powered_isotopy().components();
    let mut residues = Vec::with_capacity(3);
    for (name, (b, p)) in ["alpha", "beta", "gamma"].iter().zip(base.iter().zip(powered)) {
        let r = b
            .discrete_log(p)
            .map_err(|e| CliError::invalid("public key", e))?
            .ok_or_else(|| {
                CliError::invalid("public key", format!("isotopy_pow {name} is not a power of {name}"))
            })?;
        let regenerated = b.pow(r.value.clone());
        if &regenerated != p {
            return Err(CliError::Mismatch {
                label: format!("regenerated {name}"),
                got: regenerated.to_string(),
                expected: p.to_string(),
            });
        }
        residues.push(r);
    }
    let residues: [Residue; 3] = residues.try_into().expect("three components");
    Ok(AttackReport { residues })
}

pub fn cmd_attack(pub_path: &Path, out: &mut dyn Write) -> Result<AttackReport, CliError> {
    let public = load_public(pub_path)?;
    let report = attack(&public)?;
    let io = |e| CliError::io("<stdout>", e);
    for (name, r) in ["m", "n", "k"].iter().zip(&report.residues) {
        writeln!(out, "{name} ≡ {} (mod {})", r.value, r.modulus).map_err(io)?;
    }
    let (m, n, k) = (&report.residues[0].value, &report.residues[1].value, &report.residues[2].value);
    let regenerated = public.base_isotopy().pow(m.clone(), n.clone(), k.clone());
    if &regenerated != public.powered_isotopy() {
        return Err(CliError::Mismatch {
            label: "regenerated isotopy_pow".into(),
            got: format!("{:?}", regenerated),
            expected: format!("{:?}", public.powered_isotopy()),
        });
    }
    writeln!(out, "recovered exponents regenerate isotopy_pow").map_err(io)?;
    Ok(report)
}
