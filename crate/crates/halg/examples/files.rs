//! Writing a structure to the exchange format, reading it back and reporting
//! a check as JSON.

use halg::infinity::{check_structure, Kind};
use halg::io::{ReportFile, StructureFile};
use halg::sample::{random_structure, Sampler};

fn main() -> halg::Result<()> {
    let mut smp = Sampler::new(1);
    let t = random_structure(&mut smp, Kind::Lie, 2)?;
    let mut file = StructureFile::new();
    file.put_structure("", &t.structure)?;
    let text = file.to_canonical_string();
    println!("{} bytes of canonical JSON", text.len());

    let back = StructureFile::parse(&text)?.structure(Kind::Lie, "")?;
    let mut report = ReportFile::new("check lie");
    report.add(&check_structure(&back, back.default_n_max())?, "V", "V");
    print!("{}", report.to_json());
    Ok(())
}
