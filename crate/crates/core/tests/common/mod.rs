#![allow(dead_code)]

use std::process::Command;

/// W0 by bisection on `w e^w = z`; slow but shares nothing with the library.
pub fn w_bisect(z: f64) -> f64 {
    assert!(z >= 0.0);
    let (mut lo, mut hi) = (0.0f64, 1.0f64.max(z.ln_1p()));
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid * mid.exp() < z {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn rel_err(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs().max(f64::MIN_POSITIVE)
}

pub struct Output {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

impl Output {
    pub fn text(&self) -> String {
        String::from_utf8(self.stdout.clone()).unwrap()
    }
}

/// Run the built `virial` binary.
pub fn virial(args: &[&str]) -> Output {
    virial_env(args, &[])
}

pub fn virial_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_virial"));
    cmd.args(args).env_remove("VIRIAL_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn virial");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}
