#![no_main]

use aqc_core::channel_sim::bitflip_decode;
use aqc_core::linear_code::SparseBinaryMatrix;
use libfuzzer_sys::fuzz_target;

// Layout: cols, rows, then per row a length byte and column bytes, then the
// syndrome bits.
fuzz_target!(|data: &[u8]| {
    let mut it = data.iter().copied();
    let (Some(cols), Some(rows)) = (it.next(), it.next()) else { return };
    let cols = cols as usize % 64 + 1;
    let rows = rows as usize % 64;
    let mut adj = Vec::with_capacity(rows);
    for _ in 0..rows {
        let len = it.next().unwrap_or(0) as usize % 8;
        let mut row: Vec<u32> = (0..len).filter_map(|_| it.next()).map(|c| (c as usize % cols) as u32).collect();
        row.sort_unstable();
        row.dedup();
        adj.push(row);
    }
    let h = SparseBinaryMatrix::from_row_adjacency(cols, adj).expect("rows are in range");
    let syndrome: Vec<u8> = (0..rows).map(|_| it.next().unwrap_or(0) & 1).collect();
    let out = bitflip_decode(&h, &syndrome, 20).expect("syndrome has the right length");
    assert_eq!(out.estimate.len(), cols);
    if out.converged() {
        assert_eq!(h.syndrome(&out.estimate), syndrome);
    }
});
