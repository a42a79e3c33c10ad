//! Sieve-cache file.
//!
//! Layout: the magic bytes `PSLB`, a one-byte format version, the inclusive
//! limit as a little-endian `u64`, then the odd-only bitset packed
//! least-significant-bit first (bit `i` is the odd number `2i + 1`),
//! `ceil(((limit + 1) / 2) / 8)` bytes long.

use std::io::{Read, Write};

use super::sieve::{odd_slots, PrimeTable};
use crate::{Error, Result};

pub const CACHE_MAGIC: &[u8; 4] = b"PSLB";
pub const CACHE_VERSION: u8 = 1;
const HEADER_LEN: usize = 4 + 1 + 8;

fn payload_len(limit: u64) -> u64 {
    odd_slots(limit).div_ceil(8)
}

pub fn write_cache<W: Write>(table: &PrimeTable, mut out: W) -> Result<()> {
    out.write_all(CACHE_MAGIC)?;
    out.write_all(&[CACHE_VERSION])?;
    out.write_all(&table.limit().to_le_bytes())?;
    let len = payload_len(table.limit()) as usize;
    let bytes: Vec<u8> = table
        .odd_bits()
        .iter()
        .flat_map(|w| w.to_le_bytes())
        .take(len)
        .collect();
    out.write_all(&bytes)?;
    out.flush()?;
    Ok(())
}

pub fn read_cache<R: Read>(mut input: R) -> Result<PrimeTable> {
    let mut header = [0u8; HEADER_LEN];
    input
        .read_exact(&mut header)
        .map_err(|_| Error::Cache("truncated header".into()))?;
    if &header[..4] != CACHE_MAGIC {
        return Err(Error::Cache("bad magic bytes".into()));
    }
    if header[4] != CACHE_VERSION {
        return Err(Error::Cache(format!(
            "unsupported version {} (expected {CACHE_VERSION})",
            header[4]
        )));
    }
    let limit = u64::from_le_bytes(header[5..13].try_into().unwrap());
    if limit < 2 {
        return Err(Error::Cache(format!("limit {limit} is below 2")));
    }
    let mut payload = Vec::new();
    input.read_to_end(&mut payload)?;
    let expected = payload_len(limit);
    if payload.len() as u64 != expected {
        return Err(Error::Cache(format!(
            "bitset is {} bytes, expected {expected} for limit {limit}",
            payload.len()
        )));
    }
    let slots = odd_slots(limit);
    let words = slots.div_ceil(64) as usize;
    let mut bits = vec![0u64; words];
    for (i, chunk) in payload.chunks(8).enumerate() {
        let mut buf = [0u8; 8];
        buf[..chunk.len()].copy_from_slice(chunk);
        bits[i] = u64::from_le_bytes(buf);
    }
    let tail = slots % 64;
    if tail != 0 && bits[words - 1] >> tail != 0 {
        return Err(Error::Cache("bits set beyond the limit".into()));
    }
    if bits[0] & 1 != 0 {
        return Err(Error::Cache("1 is marked prime".into()));
    }
    Ok(PrimeTable::from_bits(limit, bits))
}
