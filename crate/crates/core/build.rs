use std::fs;

fn main() {
    let path = "data/atoms.txt";
    println!("cargo:rerun-if-changed={path}");
    let text = fs::read_to_string(path).unwrap_or_else(|e| panic!("cannot read {path}: {e}"));
    for (i, record) in text.split("\n\n").enumerate() {
        let mut name = None;
        let mut citation = None;
        for line in record.lines() {
            if let Some((k, v)) = line.split_once(" = ") {
                match k {
                    "name" => name = Some(v.trim()),
                    "citation" => citation = Some(v.trim()),
                    _ => {}
                }
            }
        }
        let name = name.unwrap_or_else(|| panic!("{path}: record {i} has no name"));
        match citation {
            Some(c) if !c.is_empty() => {}
            _ => panic!("{path}: atom `{name}` has no citation"),
        }
    }
}
