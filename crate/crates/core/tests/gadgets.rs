use viscolor::gadgets::{
    embed_in_hex_grid, gen_hard4h, gen_hard5, validate_embedding, verify_hard4h, verify_hard5, verify_reduction,
    ChannelKind, HexEmbedding, InputGraph, Instance,
};
use viscolor::Exec;

#[test]
fn sawtooth_verifies_beyond_the_acceptance_graphs() {
    for h in [InputGraph::path(4), InputGraph::cycle(4), InputGraph::complete(5)] {
        let inst = gen_hard5(&h).unwrap();
        assert!(verify_hard5(&inst).is_empty(), "{h:?}");
        assert_eq!(inst.pocket_of.len(), h.edges().len());
    }
}

#[test]
fn sawtooth_verifiers_agree_across_executors() {
    let inst = gen_hard5(&InputGraph::complete(3)).unwrap();
    let mut bad = inst.clone();
    let mut v = bad.polygon.vertices().to_vec();
    let p1 = bad.pocket_of[1][0];
    v[p1].x -= viscolor::geom::int(1);
    bad.polygon = viscolor::geom::validate_simple_polygon(v).unwrap();
    for i in [&inst, &bad] {
        assert_eq!(
            viscolor::gadgets::verify_hard5_with(i, Exec::Sequential),
            viscolor::gadgets::verify_hard5_with(i, Exec::Parallel)
        );
    }
}

#[test]
fn corridor_reduction_on_a_path() {
    let h = InputGraph::path(3);
    let emb = embed_in_hex_grid(&h).unwrap();
    validate_embedding(&h, &emb).unwrap();
    let inst = gen_hard4h(&h, &emb).unwrap();
    assert!(verify_hard4h(&inst).is_empty());
    assert!(verify_reduction(Instance::Hard4h(&inst), &h, 50_000_000)
        .unwrap()
        .holds());
}

#[test]
fn edge_channels_in_both_frames() {
    let h = InputGraph::complete(3);
    let inst = gen_hard4h(&h, &embed_in_hex_grid(&h).unwrap()).unwrap();
    let frames: Vec<(usize, bool)> = inst
        .placements
        .iter()
        .filter(|p| p.kind == ChannelKind::Edge)
        .map(|p| p.transform().unwrap())
        .collect();
    assert!(
        frames.contains(&(1, false)) && frames.contains(&(2, true)),
        "{frames:?}"
    );
    assert!(verify_hard4h(&inst).is_empty());
}

#[test]
fn embeddings_are_checked() {
    let h = InputGraph::path(2);
    let mut emb = embed_in_hex_grid(&h).unwrap();
    assert!(gen_hard4h(
        &InputGraph::path(2),
        &HexEmbedding {
            trees: vec![],
            reps: vec![]
        }
    )
    .is_err());
    emb.reps.clear();
    assert!(validate_embedding(&h, &emb).is_err());
    assert!(gen_hard4h(
        &InputGraph::new(2, &[]).unwrap(),
        &embed_in_hex_grid(&InputGraph::path(2)).unwrap()
    )
    .is_err());
}
