//! Golden cases for the `sxq` binary, run against files in `tests/fixtures`.

use std::path::PathBuf;
use std::process::Command;

pub struct Golden {
    pub args: &'static [&'static str],
    pub fixture: &'static str,
    pub status: i32,
    pub stdout: &'static str,
}

pub const GOLDEN: &[Golden] = &[
    Golden { args: &["match", "(?x ?y ?z)"], fixture: "abc.sx", status: 0, stdout: "x=a y=b z=c\n" },
    Golden { args: &["match", "(?x ?y ?z)"], fixture: "ab.sx", status: 1, stdout: "" },
    Golden { args: &["match", "(?x ?y ?z)"], fixture: "abcd.sx", status: 1, stdout: "" },
    Golden { args: &["match", "("], fixture: "abc.sx", status: 2, stdout: "" },
    Golden { args: &["all", "(%elem ?e)"], fixture: "123.sx", status: 0, stdout: "e=1\ne=2\ne=3\n" },
    Golden { args: &["all", "--max", "2", "(%suffix _)"], fixture: "abc.sx", status: 0, stdout: "\n\n" },
    Golden { args: &["all", "(%suffix ?s)"], fixture: "abc.sx", status: 0, stdout: "s=(a b c)\ns=(b c)\ns=(c)\ns=()\n" },
    Golden { args: &["all", "(%elem _)"], fixture: "empty.sx", status: 1, stdout: "" },
    Golden {
        args: &["all", "--format", "json", "(%elem ?e)"],
        fixture: "123.sx",
        status: 0,
        stdout: "{\"e\":\"1\"}\n{\"e\":\"2\"}\n{\"e\":\"3\"}\n",
    },
    Golden {
        args: &["all", "(%elem (%or (name ?n) (ports . (%elem ?p))))"],
        fixture: "server.sx",
        status: 0,
        stdout: "n=\"web\"\np=80\np=443\n",
    },
    Golden { args: &["match", "(_ . (%elem (tls ?on)))"], fixture: "server.sx", status: 0, stdout: "on=#t\n" },
    Golden { args: &["match", "_"], fixture: "two.sx", status: 2, stdout: "" },
    Golden { args: &["all", "--max", "0", "_"], fixture: "abc.sx", status: 2, stdout: "" },
    Golden { args: &["match", "_"], fixture: "missing.sx", status: 2, stdout: "" },
];

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub struct Run {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn sxq(args: &[&str], fixture_name: &str) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_sxq"))
        .args(args)
        .arg(fixture(fixture_name))
        .output()
        .expect("sxq binary runs");
    Run {
        status: out.status.code().expect("exit status"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Checks one case, describing the first mismatch.
pub fn check(case: &Golden) -> Result<(), String> {
    let run = sxq(case.args, case.fixture);
    if run.status != case.status || run.stdout != case.stdout {
        return Err(format!(
            "sxq {:?} {}: got status {} stdout {:?}, want {} {:?}",
            case.args, case.fixture, run.status, run.stdout, case.status, case.stdout
        ));
    }
    if (case.status == 2) == run.stderr.is_empty() {
        return Err(format!("sxq {:?} {}: unexpected stderr {:?}", case.args, case.fixture, run.stderr));
    }
    Ok(())
}
