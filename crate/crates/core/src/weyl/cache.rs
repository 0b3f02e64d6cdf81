//! On-disk cache of enumerated Weyl groups.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! magic "STXW" | version u8 | series u8 (ASCII letter) | rank u32 | #positive roots u32 | |W| u64
//! |W| x (#positive roots x i32 signed root index, +-(k+1))
//! |W| x u32 length
//! ```
//!
//! A file whose header does not match the requested root system, or whose
//! body fails validation, is ignored and rewritten.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use super::{generate_weyl_with_cap, SignedRoot, WeylElement, WeylGroup};
use crate::error::Result;
use crate::rootdata::RootSystem;

const MAGIC: &[u8; 4] = b"STXW";
const VERSION: u8 = 1;

/// Environment variable naming a cache directory.
pub const CACHE_DIR_ENV: &str = "STEXT_CACHE_DIR";

pub fn cache_path(dir: &Path, rs: &RootSystem) -> PathBuf {
    dir.join(format!("weyl-{}.bin", rs.cartan_type()))
}

pub fn write_cache(dir: &Path, group: &WeylGroup) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let rs = group.root_system();
    let path = cache_path(dir, rs);
    let mut buf = Vec::new();
    buf.extend_from_slice(MAGIC);
    buf.push(VERSION);
    buf.push(rs.series().letter() as u8);
    buf.extend_from_slice(&(rs.rank() as u32).to_le_bytes());
    buf.extend_from_slice(&(rs.num_positive_roots() as u32).to_le_bytes());
    buf.extend_from_slice(&(group.order() as u64).to_le_bytes());
    for e in group.elements() {
        for s in e.images() {
            buf.extend_from_slice(&s.raw().to_le_bytes());
        }
    }
    for e in group.elements() {
        buf.extend_from_slice(&(e.length() as u32).to_le_bytes());
    }
    let tmp = path.with_extension("tmp");
    fs::File::create(&tmp)?.write_all(&buf)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Reads a cached group; `Ok(None)` when the file is missing or stale.
pub fn read_cache(dir: &Path, rs: &RootSystem) -> Result<Option<WeylGroup>> {
    let path = cache_path(dir, rs);
    let mut bytes = Vec::new();
    match fs::File::open(&path) {
        Ok(mut f) => {
            f.read_to_end(&mut bytes)?;
        }
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    }
    Ok(decode(&bytes, rs))
}

fn decode(bytes: &[u8], rs: &RootSystem) -> Option<WeylGroup> {
    let mut cur = bytes;
    let mut take = |n: usize| -> Option<&[u8]> {
        if cur.len() < n {
            return None;
        }
        let (head, tail) = cur.split_at(n);
        cur = tail;
        Some(head)
    };
    if take(4)? != MAGIC || take(1)?[0] != VERSION || take(1)?[0] != rs.series().letter() as u8 {
        return None;
    }
    let rank = u32::from_le_bytes(take(4)?.try_into().ok()?) as usize;
    let npos = u32::from_le_bytes(take(4)?.try_into().ok()?) as usize;
    let count = u64::from_le_bytes(take(8)?.try_into().ok()?) as usize;
    if rank != rs.rank() || npos != rs.num_positive_roots() {
        return None;
    }
    let body = take(count.checked_mul(npos)?.checked_mul(4)?)?;
    let lengths = take(count.checked_mul(4)?)?;
    let mut elements = Vec::with_capacity(count);
    for (chunk, len) in body.chunks_exact(npos * 4).zip(lengths.chunks_exact(4)) {
        let images = chunk
            .chunks_exact(4)
            .map(|b| SignedRoot::from_raw(i32::from_le_bytes(b.try_into().unwrap())))
            .collect::<Option<Vec<_>>>()?;
        if images.iter().any(|s| s.index() >= npos) {
            return None;
        }
        let e = WeylElement::from_images(images);
        if e.length() != u32::from_le_bytes(len.try_into().unwrap()) as usize {
            return None;
        }
        elements.push(e);
    }
    if elements.len() != count {
        return None;
    }
    WeylGroup::from_element_list(rs, elements)
}

/// Loads the group from `dir` if a valid cache exists, otherwise enumerates
/// it and writes the cache.
pub fn load_or_generate(dir: &Path, rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
    if let Some(g) = read_cache(dir, rs)? {
        return Ok(g);
    }
    let g = generate_weyl_with_cap(rs, cap)?;
    write_cache(dir, &g)?;
    Ok(g)
}

/// Removes every cache file in `dir`; returns how many were deleted.
pub fn clear_cache(dir: &Path) -> Result<usize> {
    let mut n = 0;
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e.into()),
    };
    for entry in entries {
        let path = entry?.path();
        let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
        if name.starts_with("weyl-") && name.ends_with(".bin") {
            fs::remove_file(&path)?;
            n += 1;
        }
    }
    Ok(n)
}
