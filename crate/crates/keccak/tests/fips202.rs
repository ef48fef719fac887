//! Known-answer and streaming-equivalence tests for the FIPS-202 sponges.

use keccak::{sha3_256, sha3_512, shake128, SpongeState};

fn unhex(s: &str) -> Vec<u8> {
    hex::decode(s).unwrap()
}

/// Inputs exercised: empty, short ("abc"), the classic 200-byte 0xA3 message,
/// and exactly one SHAKE-128 rate block of counting bytes.
fn messages() -> Vec<Vec<u8>> {
    vec![
        Vec::new(),
        b"abc".to_vec(),
        vec![0xa3u8; 200],
        (0u8..168).collect(),
    ]
}

#[test]
fn shake128_known_answers() {
    let want: [&str; 4] = [
        "7f9c2ba4e88f827d616045507605853ed73b8093f6efbc88eb1a6eacfa66ef26",
        "5881092dd818bf5cf8a3ddb793fbcba74097d5c526a6d35f97b83351940f2cc8",
        "131ab8d2b594946b9c81333f9bb6e0ce75c3b93104fa3469d3917457385da037\
         cf232ef7164a6d1eb448c8908186ad852d3f85a5cf28da1ab6fe343817197846",
        "f15277eb61c4908d44a2853f3cde071ae2ed7a23461fbe162a1a98cf6875059c",
    ];
    for (msg, digest) in messages().iter().zip(want) {
        let digest = unhex(&digest.replace(' ', ""));
        assert_eq!(shake128(msg, digest.len()), digest, "input len {}", msg.len());
    }
    // prefix property: a shorter request is a prefix of a longer one
    assert_eq!(
        shake128(b"", 16),
        unhex("7f9c2ba4e88f827d616045507605853e")
    );
}

#[test]
fn sha3_256_known_answers() {
    let want = [
        "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a",
        "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532",
        "79f38adec5c20307a98ef76e8324afbfd46cfd81b22e3973c65fa1bd9de31787",
        "369a33badfa618d58d16aaddeaff98d66b30a70c2deee42fc809b9721dc1c524",
    ];
    for (msg, digest) in messages().iter().zip(want) {
        assert_eq!(sha3_256(msg).to_vec(), unhex(digest), "input len {}", msg.len());
    }
}

#[test]
fn sha3_512_known_answers() {
    let want = [
        "a69f73cca23a9ac5c8b567dc185a756e97c982164fe25859e0d1dcc1475c80a6\
         15b2123af1f5f94c11e3e9402c3ac558f500199d95b6d3e301758586281dcd26",
        "b751850b1a57168a5693cd924b6b096e08f621827444f70d884f5d0240d2712e\
         10e116e9192af3c91a7ec57647e3934057340b4cf408d5a56592f8274eec53f0",
        "e76dfad22084a8b1467fcf2ffa58361bec7628edf5f3fdc0e4805dc48caeeca8\
         1b7c13c30adf52a3659584739a2df46be589c51ca1a4a8416df6545a1ce8ba00",
        "9567f47a24e5c3b934777516554d4875de4b1d8a59e18b6983827dd9bf394414\
         eefdccf8f6b10acd3c08afa951be34a31d11065ccd486e71b530f33b7ef263e0",
    ];
    for (msg, digest) in messages().iter().zip(want) {
        assert_eq!(sha3_512(msg).to_vec(), unhex(digest), "input len {}", msg.len());
    }
}

#[test]
fn incremental_absorb_matches_one_shot() {
    let msg: Vec<u8> = (0..400u16).map(|i| (i % 251) as u8).collect();
    let reference = shake128(&msg, 96);
    for split in [0usize, 1, 71, 72, 135, 136, 167, 168, 169, 336, 400] {
        let mut sponge = SpongeState::shake128();
        sponge.absorb(&msg[..split]).unwrap();
        sponge.absorb(&msg[split..]).unwrap();
        let mut out = vec![0u8; 96];
        sponge.squeeze(&mut out);
        assert_eq!(out, reference, "split at {split}");
    }
}

#[test]
fn incremental_squeeze_matches_one_shot() {
    let msg = b"stream me";
    let reference = shake128(msg, 1000);
    // byte-at-a-time
    let mut sponge = SpongeState::shake128();
    sponge.absorb(msg).unwrap();
    let mut out = vec![0u8; 1000];
    for slot in out.iter_mut() {
        let mut one = [0u8; 1];
        sponge.squeeze(&mut one);
        *slot = one[0];
    }
    assert_eq!(out, reference);
    // uneven chunks straddling the rate boundary
    let mut sponge = SpongeState::shake128();
    sponge.absorb(msg).unwrap();
    let mut out = Vec::new();
    for chunk in [167usize, 2, 168, 500, 163] {
        let mut buf = vec![0u8; chunk];
        sponge.squeeze(&mut buf);
        out.extend_from_slice(&buf);
    }
    assert_eq!(out, reference);
    assert_eq!(sponge.permutations(), 1000u64.div_ceil(168));
}

#[test]
fn sha3_instances_use_their_own_rates() {
    assert_eq!(SpongeState::sha3_256().rate(), 136);
    assert_eq!(SpongeState::sha3_512().rate(), 72);
    assert_eq!(SpongeState::shake128().rate(), 168);
    // one full SHA3-256 block of input costs one absorb permutation
    let mut sponge = SpongeState::sha3_256();
    sponge.absorb(&[0u8; 136]).unwrap();
    assert_eq!(sponge.permutations(), 1);
    let mut out = [0u8; 32];
    sponge.squeeze(&mut out);
    assert_eq!(sponge.permutations(), 2);
}
