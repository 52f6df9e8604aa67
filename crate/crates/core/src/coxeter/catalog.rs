/// Relator sets giving closed {r,s} surfaces with n edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownQuotient {
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub relators: &'static str,
}

const KNOWN: &[KnownQuotient] = &[
    KnownQuotient { r: 5, s: 4, n: 30, relators: "abcba(cb)^2abcb, (bac)^6, (bacba)^4" },
    KnownQuotient { r: 5, s: 4, n: 160, relators: "srr(rS)^-2RSSRRsR" },
    KnownQuotient { r: 5, s: 4, n: 360, relators: "(srrs)^2(RSSR)^2" },
    KnownQuotient { r: 5, s: 4, n: 1800, relators: "(rS)^-10, srrssRs(rrS)^2(rS)^2SRRsR" },
    KnownQuotient { r: 5, s: 5, n: 15, relators: "(bcba)^3, (bc(bca)^2)^2, (bc(ab)^2ca)^2" },
    KnownQuotient { r: 5, s: 5, n: 40, relators: "srrsRSSR" },
    KnownQuotient { r: 5, s: 5, n: 80, relators: "s(rS)^2SRRsR" },
    KnownQuotient { r: 5, s: 5, n: 150, relators: "srrssrSRRSSR, s(rS)^3(Rs)^2R" },
    KnownQuotient { r: 5, s: 5, n: 900, relators: "s(rrSS)^2RsRRssR" },
    KnownQuotient { r: 7, s: 7, n: 28, relators: "rrrSSrS" },
];

pub fn catalog() -> &'static [KnownQuotient] {
    KNOWN
}

impl KnownQuotient {
    pub fn find(r: usize, s: usize, n: usize) -> Option<KnownQuotient> {
        KNOWN.iter().copied().find(|q| q.r == r && q.s == s && q.n == n)
    }
}
