//! The JSON files under `fixtures/` are the canonical serializations of the
//! library's fixture constructors. Set `UPDATE_FIXTURES=1` to rewrite them.

use std::path::PathBuf;

use starfan::fixtures;
use starfan_cli::document::{parse_document, serialize, Document};

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn generated() -> Vec<(String, Document)> {
    let mut docs: Vec<(String, Document)> = fixtures::realizations()
        .into_iter()
        .map(|(name, r)| (name.to_string(), Document::Realization(r)))
        .collect();
    docs.push(("square_system".into(), Document::StudiableSystem(fixtures::square_system())));
    docs.push((
        "opposite_rays_system".into(),
        Document::StudiableSystem(fixtures::opposite_rays_system()),
    ));
    docs.push(("two_triangles".into(), Document::FundamentalSet(fixtures::two_triangles())));
    docs.push(("projective_plane".into(), Document::FundamentalSet(fixtures::projective_plane())));
    docs.push((
        "octahedron_complex".into(),
        Document::Complex(fixtures::octahedron().complex().clone()),
    ));
    docs
}

#[test]
fn fixture_files_match_constructors() {
    let update = std::env::var_os("UPDATE_FIXTURES").is_some();
    for (name, doc) in generated() {
        let path = fixture_dir().join(format!("{name}.json"));
        let text = serialize(&doc);
        if update {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let on_disk = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, text, "{name}.json is stale");
        assert_eq!(parse_document(&on_disk).unwrap(), doc, "{name}.json");
    }
}

#[test]
fn every_fixture_file_parses() {
    let mut count = 0;
    for entry in std::fs::read_dir(fixture_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let text = std::fs::read_to_string(&path).unwrap();
            parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            count += 1;
        }
    }
    assert!(count >= generated().len());
}
