//! Every verification suite, one `<name> PASS|FAIL|INCONCLUSIVE <witness>`
//! line per check.

use std::io;

use hamsphere::verify::{run_verify, Suite, VerifyOptions};

fn main() -> hamsphere::Result<()> {
    let code = run_verify(&Suite::ALL, &VerifyOptions::default(), &mut io::stdout().lock())?;
    std::process::exit(code);
}
