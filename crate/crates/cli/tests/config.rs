//! The bundled configuration reproduces the hard-coded checks in the core
//! library: symbols, series, the E-infinity readings and the ring map.

use invar_cli::{execute, Command, Context};
use invar_core::series::{einfty_series_check, image_subring_check, s8_ring_map_audit, EinftyReading};
use invar_core::subring::Symbols;
use serde_json::Value;

fn ctx() -> Context {
    Context::bundled()
}

#[test]
fn bundled_symbols_match_builtin_dickson_classes() {
    let c = ctx();
    let reference = Symbols::wtz();
    for name in ["d2", "d3", "d4", "d6", "d7", "d2^2*d3 + d4*d7"] {
        assert_eq!(c.symbols.eval(name).unwrap(), reference.eval(name).unwrap(), "{name}");
    }
}

fn as_vec(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn einfty_readings_agree_with_core() {
    let c = ctx();
    for (name, reading) in [("symmetric", EinftyReading::Symmetric), ("literal", EinftyReading::Literal)] {
        let r = execute(&c, &Command::Einfty { reading: name.into() }, Some(30)).unwrap();
        let core = einfty_series_check(reading, 30).unwrap();
        let einf: Vec<i64> = core.table.iter().map(|t| t.1).collect();
        let seq: Vec<i64> = core.table.iter().map(|t| t.2).collect();
        assert_eq!(as_vec(&r.data["einfty"]), einf, "{name}");
        assert_eq!(as_vec(&r.data["sequence"]), seq, "{name}");
        assert_eq!(r.data["series_equal"].as_bool().unwrap(), core.series_equal);
        assert_eq!(r.ok, core.agrees());
        assert_eq!(r.data["flags"].as_array().unwrap().len(), core.flags.len());
    }
}

#[test]
fn ring_map_agrees_with_core() {
    let r = execute(&ctx(), &Command::RingMap { name: "S8".into() }, Some(30)).unwrap();
    assert!(r.ok, "{:?}", r.failure);
    let core = s8_ring_map_audit().unwrap();
    let rels = r.data["relations"].as_array().unwrap();
    assert_eq!(rels.len(), core.relations.len());
    for ((rel, img, vanishes), v) in core.relations.iter().zip(rels) {
        assert_eq!(v["relation"], rel.as_str());
        assert_eq!(v["image"], img.as_str());
        assert_eq!(v["vanishes"].as_bool().unwrap(), *vanishes);
    }
    assert_eq!(r.data["solved"][0][1], core.solved[0].1.as_str());
    let image = image_subring_check(30).unwrap();
    assert_eq!(r.data["image_ring"]["mismatch"].as_u64().map(|d| d as u32), image.mismatch);
    assert_eq!(
        r.data["image_ring"]["shortfall_without_essential"].as_u64().map(|d| d as u32),
        image.shortfall_without_d3d4
    );
}

#[test]
fn every_configured_name_resolves() {
    let c = ctx();
    c.validate().unwrap();
    for name in c.config.descriptors.keys() {
        let r = execute(&c, &Command::Series { descriptor: name.clone() }, Some(20)).unwrap();
        assert!(r.ok, "{name}");
    }
    for name in c.config.sequences.keys() {
        execute(&c, &Command::Detect { sequence: name.clone() }, Some(30)).unwrap();
    }
}
