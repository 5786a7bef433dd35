use invar_cli::cache::{cache_key, Cache};
use invar_cli::Report;
use serde_json::json;

fn sample() -> Report {
    let mut r = Report::new("series", json!({"dims": [1, 0, 1]}));
    r.line("dims: 1,0,1");
    r
}

#[test]
fn put_then_get_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let key = cache_key(&["a", "b"]);
    assert!(cache.get(&key).is_none());
    cache.put(&key, &sample());
    let e = cache.get(&key).unwrap();
    assert_eq!(e.value, sample());
    assert_eq!(e.key, key);
}

#[test]
fn keys_are_length_prefixed() {
    assert_ne!(cache_key(&["ab", "c"]), cache_key(&["a", "bc"]));
    assert_eq!(cache_key(&["x"]), cache_key(&["x"]));
}

#[test]
fn version_change_is_a_miss() {
    let dir = tempfile::tempdir().unwrap();
    let key = cache_key(&["k"]);
    Cache::with_version(dir.path(), "old").put(&key, &sample());
    assert!(Cache::with_version(dir.path(), "new").get(&key).is_none());
    // The old entry is left for its own version.
    assert!(Cache::with_version(dir.path(), "old").get(&key).is_some());
}

#[test]
fn tampered_entries_are_dropped() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let key = cache_key(&["k"]);
    cache.put(&key, &sample());
    let path = dir.path().join(format!("{key}.json"));
    let text = std::fs::read_to_string(&path).unwrap().replace("1,0,1", "1,1,1");
    std::fs::write(&path, text).unwrap();
    assert!(cache.get(&key).is_none());
    assert!(!path.exists());

    cache.put(&key, &sample());
    std::fs::write(&path, b"not json").unwrap();
    assert!(cache.get(&key).is_none());
    assert!(!path.exists());
}

#[test]
fn unwritable_directory_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plain");
    std::fs::write(&file, b"").unwrap();
    let cache = Cache::new(file.join("sub"));
    cache.put("k", &sample());
    assert!(cache.get("k").is_none());
}
