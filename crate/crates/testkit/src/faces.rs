//! Naive face tracer for rotation systems, walking (vertex, slot) corners.
//!
//! Input matches the main representation (half-edge `h` pairs with `h ^ 1`)
//! but the traversal here works purely with rotation slots.

/// Traces all faces. Returns each face as the list of (vertex, slot) darts
/// visited, where a dart means "leave this vertex through this slot".
pub fn trace_faces_oracle(rotations: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    // locate every half-edge: half -> (vertex, slot)
    let mut loc = std::collections::HashMap::new();
    for (v, rot) in rotations.iter().enumerate() {
        for (i, &h) in rot.iter().enumerate() {
            assert!(loc.insert(h, (v, i)).is_none(), "duplicate half-edge");
        }
    }
    let mut visited = std::collections::HashSet::new();
    let mut faces = Vec::new();
    let mut starts: Vec<usize> = loc.keys().copied().collect();
    starts.sort();
    for h0 in starts {
        if visited.contains(&h0) {
            continue;
        }
        let mut face = Vec::new();
        let mut h = h0;
        loop {
            visited.insert(h);
            let (v, i) = loc[&h];
            face.push((v, i));
            // cross the edge, then take the next slot counterclockwise
            let (w, j) = loc[&(h ^ 1)];
            let next_slot = (j + 1) % rotations[w].len();
            h = rotations[w][next_slot];
            if h == h0 {
                break;
            }
        }
        faces.push(face);
    }
    faces
}

pub fn face_count_oracle(rotations: &[Vec<usize>]) -> usize {
    trace_faces_oracle(rotations).len()
}

/// Genus from V - E + F, asserting the count is of closed-surface form.
pub fn genus_oracle(rotations: &[Vec<usize>]) -> u32 {
    let v = rotations.len() as i64;
    let e: i64 = rotations.iter().map(|r| r.len() as i64).sum::<i64>() / 2;
    let f = face_count_oracle(rotations) as i64;
    let chi = v - e + f;
    assert!(chi <= 2 && chi % 2 == 0, "bad Euler characteristic {chi}");
    ((2 - chi) / 2) as u32
}
