//! Subset files: a JSON array of triples (`[[1,2,3],[1,4,5]]`) or a compact
//! hex bitset. In the hex form byte `j` holds the vertices `8j..8j+7`, least
//! significant bit first; the string has `ceil(C(n,3) / 8)` bytes.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::VertexSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SubsetFormat {
    Json,
    Hex,
}

pub fn subset_to_json(w: &VertexSubset) -> String {
    let triples: Vec<[u16; 3]> = w.triples().map(|t| t.elements()).collect();
    serde_json::to_string(&triples).expect("triples serialize")
}

pub fn subset_from_json(s: &str, n: usize) -> Result<VertexSubset> {
    let triples: Vec<[u16; 3]> = serde_json::from_str(s).map_err(|e| Error::Format(format!("bad triple list: {e}")))?;
    VertexSubset::from_triples(n, &triples)
}

pub fn subset_to_hex(w: &VertexSubset) -> String {
    let bytes: Vec<u8> = w.words().iter().flat_map(|x| x.to_le_bytes()).take(w.universe().div_ceil(8)).collect();
    hex::encode(bytes)
}

pub fn subset_from_hex(s: &str, n: usize) -> Result<VertexSubset> {
    let bytes = hex::decode(s.trim()).map_err(|e| Error::Format(format!("bad hex bitset: {e}")))?;
    let empty = VertexSubset::empty(n)?;
    let expected = empty.universe().div_ceil(8);
    if bytes.len() != expected {
        return Err(Error::Format(format!("hex bitset has {} bytes, expected {expected}", bytes.len())));
    }
    let words = bytes
        .chunks(8)
        .map(|c| {
            let mut buf = [0u8; 8];
            buf[..c.len()].copy_from_slice(c);
            u64::from_le_bytes(buf)
        })
        .collect();
    VertexSubset::from_words(n, words)
}

/// Reads either form; a leading `[` selects the JSON form.
pub fn read_subset_file(path: &Path, n: usize) -> Result<VertexSubset> {
    let text = fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('[') {
        subset_from_json(&text, n)
    } else {
        subset_from_hex(&text, n)
    }
}

pub fn write_subset_file(path: &Path, w: &VertexSubset, format: SubsetFormat) -> Result<()> {
    let text = match format {
        SubsetFormat::Json => subset_to_json(w),
        SubsetFormat::Hex => subset_to_hex(w),
    };
    fs::write(path, text + "\n").map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn json_form_matches_layout() {
        let w = VertexSubset::from_triples(6, &[[1, 4, 5], [1, 2, 3]]).unwrap();
        assert_eq!(subset_to_json(&w), "[[1,2,3],[1,4,5]]");
        assert_eq!(subset_from_json("[[1,2,3],[5,4,1]]", 6).unwrap(), w);
        assert!(subset_from_json("[[1,2]]", 6).is_err());
    }

    #[test]
    fn hex_rejects_bits_past_universe() {
        // n=5 has 10 vertices, two bytes; bit 10 does not exist
        assert!(subset_from_hex("ff07", 5).is_err());
        assert_eq!(subset_from_hex("ff03", 5).unwrap().len(), 10);
        assert!(subset_from_hex("ff", 5).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let w = VertexSubset::from_indices(9, [0, 7, 80, 83]).unwrap();
        for fmt in [SubsetFormat::Json, SubsetFormat::Hex] {
            let p = dir.path().join("w.txt");
            write_subset_file(&p, &w, fmt).unwrap();
            assert_eq!(read_subset_file(&p, 9).unwrap(), w);
        }
    }

    proptest! {
        #[test]
        fn both_forms_round_trip(n in 3usize..14, seed in proptest::collection::vec(any::<u32>(), 0..60)) {
            let universe = crate::combinat::binomial(n as u64, 3).unwrap() as usize;
            let w = VertexSubset::from_indices(n, seed.iter().map(|&s| s as usize % universe)).unwrap();
            prop_assert_eq!(subset_from_json(&subset_to_json(&w), n).unwrap(), w.clone());
            prop_assert_eq!(subset_from_hex(&subset_to_hex(&w), n).unwrap(), w);
        }
    }
}
