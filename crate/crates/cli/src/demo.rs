//! Replays the worked examples, printing every intermediate value and
//! failing on the first one that differs from the recorded constant.

use std::fmt::Display;
use std::io::Write;

use num_bigint::BigUint;
use qgelgamal::classic::{self, ClassicParams};
use qgelgamal::worked_example::{self as ex, ClassicRun};
use qgelgamal::{markovski, scheme, Exponents, Isotopy, Leader, Permutation, Quasigroup, SymbolString};

use crate::error::CliError;

struct Demo<'a> {
    out: &'a mut dyn Write,
}

impl Demo<'_> {
    fn line(&mut self, text: impl Display) -> Result<(), CliError> {
        writeln!(self.out, "{text}").map_err(|e| CliError::io("<stdout>", e))
    }

    fn check<T: PartialEq + Display>(&mut self, label: &str, got: T, expected: T) -> Result<(), CliError> {
        self.line(format_args!("{label} = {got}"))?;
        if got != expected {
            return Err(CliError::Mismatch {
                label: label.into(),
                got: got.to_string(),
                expected: expected.to_string(),
            });
        }
        Ok(())
    }

    fn check_images(&mut self, label: &str, p: &Permutation, expected: &[usize]) -> Result<(), CliError> {
        self.check(label, join(p.images(), " "), join(expected, " "))
    }

    fn check_table(&mut self, label: &str, q: &Quasigroup, expected: &[[usize; 7]; 7]) -> Result<(), CliError> {
        self.line(label)?;
        self.line(format_args!("    | {}", join(&(0..q.order()).collect::<Vec<_>>(), " ")))?;
        for (x, row) in q.rows().enumerate() {
            self.line(format_args!("  {x} | {}", join(row, " ")))?;
            if row != expected[x] {
                return Err(CliError::Mismatch {
                    label: format!("{label}, row {x}"),
                    got: join(row, " "),
                    expected: join(&expected[x], " "),
                });
            }
        }
        Ok(())
    }
}

fn join<T: Display>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn digits(items: &[usize]) -> String {
    join(items, "")
}

pub fn run(example: u8, out: &mut dyn Write) -> Result<(), CliError> {
    let mut demo = Demo { out };
    match example {
        1 => classic_run(&mut demo, &ex::CLASSIC_1),
        2 => classic_run(&mut demo, &ex::CLASSIC_2),
        3 => quasigroup_run(&mut demo),
        other => Err(CliError::Usage(format!("no worked example {other}; choose 1, 2 or 3"))),
    }?;
    demo.line("all values match")
}

fn classic_run(demo: &mut Demo<'_>, run: &ClassicRun) -> Result<(), CliError> {
    let big = BigUint::from;
    let fail = |e: qgelgamal::ClassicError| CliError::invalid("classical parameters", e);
    demo.line(format_args!("p = {}, g = {}, c = {}, k = {}, m = {}", run.p, run.g, run.c, run.k, run.m))?;
    let params = ClassicParams::new(big(run.p), big(run.g)).map_err(fail)?;
    let keys = classic::classic_keygen(&params, big(run.c)).map_err(fail)?;
    demo.check(&format!("d = {}^{} mod {}", run.g, run.c, run.p), keys.d.clone(), big(run.d))?;
    let ct = classic::classic_encrypt(&params, &keys.d, &big(run.m), &big(run.k)).map_err(fail)?;
    demo.check(&format!("r = {}^{} mod {}", run.g, run.k, run.p), ct.r.clone(), big(run.r))?;
    demo.check(
        &format!("e = {}·{}^{} mod {}", run.m, run.d, run.k, run.p),
        ct.e.clone(),
        big(run.e),
    )?;
    demo.line(format_args!("(r, e) = ({}, {})", ct.r, ct.e))?;
    let m = classic::classic_decrypt(&params, &keys.c, &ct).map_err(fail)?;
    demo.check(
        &format!("m' = {}·{}^{} mod {}", ct.e, ct.r, run.p - 1 - run.c, run.p),
        m,
        big(run.m),
    )
}

fn quasigroup_run(demo: &mut Demo<'_>) -> Result<(), CliError> {
    let fail = |e: qgelgamal::SchemeError| CliError::invalid("worked example", e);
    let qfail = |e: qgelgamal::QuasigroupError| CliError::invalid("worked example", e);
    let n = ex::ORDER;
    let id = Permutation::identity(n);
    let q = Quasigroup::from_rows(&ex::TABLE_2).map_err(qfail)?;
    let (alpha, beta, gamma) = (ex::alpha(), ex::beta(), ex::gamma());

    demo.line("-- keys")?;
    demo.line(format_args!("alpha = {alpha}"))?;
    demo.line(format_args!("beta = {beta}"))?;
    demo.line(format_args!("gamma = {gamma}"))?;
    let gamma_inv = Permutation::parse_cycles(ex::GAMMA_INVERSE, n).expect("valid constant");
    demo.check("gamma^-1", gamma.inverse().to_string(), gamma_inv.to_string())?;

    let partial = |a: &Permutation, b: &Permutation, c: &Permutation| {
        q.apply_isotopy(&Isotopy::new(a.clone(), b.clone(), c.clone()).expect("degree 7"))
            .map_err(qfail)
    };
    demo.check_table("table 3 (alpha)", &partial(&alpha, &id, &id)?, &ex::TABLE_3)?;
    demo.check_table("table 4 (beta)", &partial(&alpha, &beta, &id)?, &ex::TABLE_4)?;
    demo.check_table("table 5 (gamma^-1)", &partial(&alpha, &beta, &gamma)?, &ex::TABLE_5)?;

    let (m, nn, k) = ex::PRIVATE;
    let private = Exponents::new(m, nn, k).map_err(fail)?;
    let (public, private) =
        scheme::keygen(q.clone(), ex::base_isotopy(), private, Leader(ex::LEADER)).map_err(fail)?;
    demo.line(format_args!("private key (m, n, k) = ({m}, {nn}, {k})"))?;
    let pw = public.powered_isotopy().clone();
    demo.check("alpha^3", pw.alpha.to_string(), ex::PUBLIC_POWER_CYCLES[0].into())?;
    demo.check("beta^6", pw.beta.to_string(), ex::PUBLIC_POWER_CYCLES[1].into())?;
    demo.check("gamma^5", pw.gamma.to_string(), ex::PUBLIC_POWER_CYCLES[2].into())?;
    demo.check("gamma^-5", pw.gamma.inverse().to_string(), ex::PUBLIC_POWER_CYCLES[3].into())?;
    demo.check_table("table 6 (alpha^3)", &partial(&pw.alpha, &id, &id)?, &ex::TABLE_6)?;
    demo.check_table("table 7 (beta^6)", &partial(&pw.alpha, &pw.beta, &id)?, &ex::TABLE_7)?;
    demo.check_table("table 8 ((gamma^5)^-1)", &partial(&pw.alpha, &pw.beta, &pw.gamma)?, &ex::TABLE_8)?;

    demo.line("-- encryption")?;
    let (r, s, t) = ex::EPHEMERAL;
    let eph = Exponents::new(r, s, t).map_err(fail)?;
    demo.line(format_args!("ephemeral (r, s, t) = ({r}, {s}, {t})"))?;
    let te = eph.raise(public.base_isotopy());
    for (i, (name, p)) in ["alpha^5", "beta^3", "gamma^6"].iter().zip(te.components()).enumerate() {
        demo.check_images(name, p, &ex::EPHEMERAL_IMAGES[i])?;
        demo.check(name, p.to_string(), ex::EPHEMERAL_CYCLES[i].into())?;
    }
    for (i, (name, p)) in ["alpha*", "beta*", "gamma*"].iter().zip(pw.components()).enumerate() {
        demo.check_images(name, p, &ex::PUBLIC_POWER_IMAGES[i])?;
    }
    let shared_bob = eph.raise(&pw);
    check_shared(demo, &shared_bob, "sender")?;
    let shared = q.apply_isotopy(&shared_bob).map_err(qfail)?;
    let sa = &shared_bob;
    demo.check_table("table 9 (alpha^15)", &partial(&sa.alpha, &id, &id)?, &ex::TABLE_9)?;
    demo.check_table("table 10 (beta^18)", &partial(&sa.alpha, &sa.beta, &id)?, &ex::TABLE_10)?;
    demo.check_table("table 11 ((gamma^30)^-1)", &shared, &ex::TABLE_11)?;

    let leader = ex::LEADER;
    let mut prev = leader;
    for (i, &u) in ex::PLAINTEXT.iter().enumerate() {
        let v = shared.op(prev, u);
        demo.check(&format!("v{} = {prev}·{u}", i + 1), v, ex::CIPHERTEXT[i])?;
        prev = v;
    }
    let plain = SymbolString::new(n, ex::PLAINTEXT.to_vec()).map_err(|e| fail(e.into()))?;
    let ct = scheme::encrypt(&public, &plain, &eph).map_err(fail)?;
    demo.check("b'", digits(ct.body().symbols()), digits(&ex::CIPHERTEXT))?;

    demo.line("-- decryption")?;
    let te = ct.ephemeral_isotopy();
    for (i, (name, p)) in ["alpha**", "beta**", "gamma**"].iter().zip(te.components()).enumerate() {
        demo.check_images(name, p, &ex::EPHEMERAL_IMAGES[i])?;
    }
    let shared_alice = private.raise(te);
    check_shared(demo, &shared_alice, "receiver")?;
    let shared_a = scheme::derive_shared_quasigroup(public.quasigroup(), te, &private).map_err(fail)?;
    demo.check_table("shared quasigroup", &shared_a, &ex::TABLE_11)?;
    let division = shared_a.left_division();
    demo.check_table("table 12 (left division)", &division, &ex::TABLE_12)?;
    let mut prev = leader;
    for (i, &v) in ct.body().symbols().iter().enumerate() {
        let u = division.op(prev, v);
        demo.check(&format!("u{} = {prev}\\{v}", i + 1), u, ex::PLAINTEXT[i])?;
        prev = v;
    }
    let recovered = scheme::decrypt(&public, &private, &ct).map_err(fail)?;
    let direct = markovski::decrypt(&shared_a, Leader(leader), ct.body()).map_err(|e| fail(e.into()))?;
    demo.check("b (scheme)", digits(recovered.symbols()), digits(&ex::PLAINTEXT))?;
    demo.check("b (chain)", digits(direct.symbols()), digits(&ex::PLAINTEXT))
}

/// Checks `(α^15, β^18, γ^30)` as computed by one side.
fn check_shared(demo: &mut Demo<'_>, shared: &Isotopy, side: &str) -> Result<(), CliError> {
    let names = ["alpha^15", "beta^18", "gamma^30"];
    for (i, p) in shared.components().into_iter().enumerate() {
        let label = format!("{side}: {}", names[i]);
        demo.check_images(&label, p, &ex::SHARED_IMAGES[i])?;
        demo.check(&label, p.to_string(), ex::SHARED_CYCLES[i].into())?;
    }
    demo.check(
        &format!("{side}: gamma^-30"),
        shared.gamma.inverse().to_string(),
        ex::SHARED_CYCLES[3].into(),
    )
}
