//! Hand-counted ground-truth fixtures.
//!
//! The passage corpus carries manual counts for each passage, produced by
//! counting by hand under these conventions:
//!
//! - words: whitespace tokens containing at least one alphanumeric character;
//! - sentences: grammatical sentences, headings counting as one each;
//! - syllables: dictionary pronunciation, numeral tokens counting one;
//! - characters: alphabetic characters only;
//! - polysyllables: words of three or more syllables per the dictionary
//!   pronunciation.
//!
//! The counts are frozen here on purpose: they are the ground truth that the
//! counting strategies are measured against, not something recomputed.

/// A text passage with its manual counts.
#[derive(Debug, Clone, Copy)]
pub struct HandCountedPassage {
    pub name: &'static str,
    pub text: &'static str,
    pub words: usize,
    pub sentences: usize,
    pub syllables: usize,
    pub characters: usize,
    pub polysyllables: usize,
}

pub const HAND_COUNTED_PASSAGES: &[HandCountedPassage] = &[
    HandCountedPassage {
        name: "p01-intro",
        text: "Privacy Policy\nWe collect personal information when you register on our website. This policy explains how we use your data. We may share your information with trusted partners.",
        words: 28,
        sentences: 4,
        syllables: 50,
        characters: 146,
        polysyllables: 7,
    },
    HandCountedPassage {
        name: "p02-cookies",
        text: "Cookies help us remember your settings and improve our services. You can disable cookies in your browser at any time. Some features may not function without cookies enabled.",
        words: 28,
        sentences: 3,
        syllables: 42,
        characters: 143,
        polysyllables: 4,
    },
    HandCountedPassage {
        name: "p03-retention",
        text: "Data Retention\nWe retain records for thirty days after account deletion. You may request deletion of your account at any time. We honor verified deletion requests within a reasonable period.",
        words: 30,
        sentences: 4,
        syllables: 56,
        characters: 158,
        polysyllables: 7,
    },
    HandCountedPassage {
        name: "p04-security",
        text: "How We Use Information\nWe use encryption to protect sensitive information during transmission. We log internet protocol addresses for security purposes. Security measures include layered access controls.",
        words: 27,
        sentences: 4,
        syllables: 60,
        characters: 174,
        polysyllables: 11,
    },
    HandCountedPassage {
        name: "p05-advertising",
        text: "Third parties may place advertisements on our pages. Advertising partners may combine this data with other information. Our newsletter delivers updates about products and promotions. We never sell your personal data to advertisers.",
        words: 33,
        sentences: 4,
        syllables: 64,
        characters: 195,
        polysyllables: 8,
    },
    HandCountedPassage {
        name: "p06-sharing",
        text: "Information Sharing\nWe may share your information with trusted partners. Aggregated statistics may be shared with research organizations. We operate globally and transfer data across borders.",
        words: 26,
        sentences: 4,
        syllables: 53,
        characters: 163,
        polysyllables: 7,
    },
    HandCountedPassage {
        name: "p07-rights",
        text: "Your Rights\nCalifornia residents may exercise rights described in this section. We respond to verified requests within thirty days. Contact us.",
        words: 21,
        sentences: 4,
        syllables: 37,
        characters: 120,
        polysyllables: 4,
    },
    HandCountedPassage {
        name: "p08-changes",
        text: "Changes to this policy will be posted on this page. Your continued use of the site constitutes acceptance of these terms. If you have questions, contact our support team. We respond within 30 days.",
        words: 34,
        sentences: 4,
        syllables: 49,
        characters: 157,
        polysyllables: 4,
    },
    HandCountedPassage {
        name: "p09-audiences",
        text: "Our services are not directed to children under thirteen. European users enjoy additional rights under applicable law. This notice describes our practices regarding mobile applications.",
        words: 25,
        sentences: 3,
        syllables: 52,
        characters: 158,
        polysyllables: 8,
    },
    HandCountedPassage {
        name: "p10-collection",
        text: "We collect personal information when you register on our website. Cookies help us remember your settings and improve our services. We retain records for thirty days after account deletion. If you have questions, contact our support team. Changes to this policy will be posted on this page.",
        words: 47,
        sentences: 5,
        syllables: 74,
        characters: 237,
        polysyllables: 7,
    },
    HandCountedPassage {
        name: "p11-mixed",
        text: "Privacy Policy\nWe use encryption to protect sensitive information during transmission. You can disable cookies in your browser at any time. We respond to verified requests within thirty days. Contact us.",
        words: 31,
        sentences: 5,
        syllables: 56,
        characters: 169,
        polysyllables: 8,
    },
    HandCountedPassage {
        name: "p12-long",
        text: "This policy explains how we use your data. We operate globally and transfer data across borders. Advertising partners may combine this data with other information. You may request deletion of your account at any time.\nData Retention\nWe log internet protocol addresses for security purposes.",
        words: 45,
        sentences: 6,
        syllables: 86,
        characters: 241,
        polysyllables: 12,
    },
];

/// Sentence pool used to assemble deterministic synthetic corpora for the
/// strategy comparison harness.
pub const SENTENCE_POOL: &[&str] = &[
    "We collect personal information when you register on our website.",
    "This policy explains how we use your data.",
    "We may share your information with trusted partners.",
    "Cookies help us remember your settings and improve our services.",
    "You can disable cookies in your browser at any time.",
    "We retain records for thirty days after account deletion.",
    "Third parties may place advertisements on our pages.",
    "If you have questions, contact our support team.",
    "We use encryption to protect sensitive information during transmission.",
    "Our services are not directed to children under thirteen.",
    "You may request deletion of your account at any time.",
    "We never sell your personal data to advertisers.",
    "Changes to this policy will be posted on this page.",
    "European users enjoy additional rights under applicable law.",
    "We log internet protocol addresses for security purposes.",
    "Your continued use of the site constitutes acceptance of these terms.",
    "We respond to verified requests within thirty days.",
    "Advertising partners may combine this data with other information.",
    "Some features may not function without cookies enabled.",
    "This notice describes our practices regarding mobile applications.",
    "California residents may exercise rights described in this section.",
    "We operate globally and transfer data across borders.",
    "Our newsletter delivers updates about products and promotions.",
    "Security measures include layered access controls.",
    "Aggregated statistics may be shared with research organizations.",
    "We honor verified deletion requests within a reasonable period.",
];

/// Deterministic synthetic corpus: `n` passages assembled from
/// [`SENTENCE_POOL`] by fixed index arithmetic.
pub fn synthetic_corpus(n: usize) -> Vec<String> {
    let pool = SENTENCE_POOL;
    (0..n)
        .map(|i| {
            let len = 3 + (i * 5 + 1) % 5;
            (0..len)
                .map(|j| pool[(i * 7 + j * 3 + i * j) % pool.len()])
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

/// Frozen Porter stemmer vectors: full-pipeline outputs for the shipped
/// test vocabulary, cross-checked between two independent implementations
/// of the published algorithm.
pub fn porter_vectors() -> &'static [(&'static str, &'static str)] {
    PORTER_VECTORS
}

const PORTER_VECTORS: &[(&str, &str)] = &[
    ("caresses", "caress"),
    ("ponies", "poni"),
    ("ties", "ti"),
    ("caress", "caress"),
    ("cats", "cat"),
    ("feed", "feed"),
    ("agreed", "agre"),
    ("plastered", "plaster"),
    ("bled", "bled"),
    ("motoring", "motor"),
    ("sing", "sing"),
    ("conflated", "conflat"),
    ("troubled", "troubl"),
    ("sized", "size"),
    ("hopping", "hop"),
    ("tanned", "tan"),
    ("falling", "fall"),
    ("hissing", "hiss"),
    ("fizzed", "fizz"),
    ("failing", "fail"),
    ("filing", "file"),
    ("happy", "happi"),
    ("sky", "sky"),
    ("relational", "relat"),
    ("conditional", "condit"),
    ("rational", "ration"),
    ("valenci", "valenc"),
    ("hesitanci", "hesit"),
    ("digitizer", "digit"),
    ("radicalli", "radic"),
    ("differentli", "differ"),
    ("vileli", "vile"),
    ("analogousli", "analog"),
    ("vietnamization", "vietnam"),
    ("predication", "predic"),
    ("operator", "oper"),
    ("feudalism", "feudal"),
    ("decisiveness", "decis"),
    ("hopefulness", "hope"),
    ("callousness", "callous"),
    ("formaliti", "formal"),
    ("sensitiviti", "sensit"),
    ("sensibiliti", "sensibl"),
    ("triplicate", "triplic"),
    ("formative", "form"),
    ("formalize", "formal"),
    ("electriciti", "electr"),
    ("electrical", "electr"),
    ("hopeful", "hope"),
    ("goodness", "good"),
    ("revival", "reviv"),
    ("allowance", "allow"),
    ("inference", "infer"),
    ("airliner", "airlin"),
    ("gyroscopic", "gyroscop"),
    ("adjustable", "adjust"),
    ("defensible", "defens"),
    ("irritant", "irrit"),
    ("replacement", "replac"),
    ("adjustment", "adjust"),
    ("dependent", "depend"),
    ("adoption", "adopt"),
    ("communism", "commun"),
    ("activate", "activ"),
    ("angulariti", "angular"),
    ("homologous", "homolog"),
    ("effective", "effect"),
    ("bowdlerize", "bowdler"),
    ("probate", "probat"),
    ("rate", "rate"),
    ("cease", "ceas"),
    ("controlling", "control"),
    ("rolling", "roll"),
    ("collecting", "collect"),
    ("collected", "collect"),
    ("collection", "collect"),
    ("collects", "collect"),
    ("privacy", "privaci"),
    ("policies", "polici"),
    ("policy", "polici"),
    ("personal", "person"),
    ("information", "inform"),
    ("sharing", "share"),
    ("shared", "share"),
    ("processing", "process"),
    ("processed", "process"),
    ("retention", "retent"),
    ("deletion", "delet"),
    ("deleting", "delet"),
    ("tracking", "track"),
    ("tracked", "track"),
    ("cookies", "cooki"),
    ("consent", "consent"),
    ("agreement", "agreement"),
    ("agreements", "agreement"),
    ("disclosure", "disclosur"),
    ("disclosed", "disclos"),
    ("advertising", "advertis"),
    ("advertisers", "advertis"),
    ("analytics", "analyt"),
    ("partially", "partial"),
    ("partial", "partial"),
    ("mainly", "mainli"),
    ("significant", "signific"),
    ("acceptable", "accept"),
    ("predominantly", "predominantli"),
    ("generally", "gener"),
    ("identifiers", "identifi"),
    ("identifiable", "identifi"),
    ("legitimate", "legitim"),
    ("notification", "notif"),
    ("notifications", "notif"),
    ("obligations", "oblig"),
    ("provides", "provid"),
    ("provided", "provid"),
    ("providing", "provid"),
    ("security", "secur"),
    ("transfers", "transfer"),
    ("transferred", "transfer"),
    ("transferring", "transfer"),
    ("updates", "updat"),
    ("updated", "updat"),
    ("parties", "parti"),
    ("party", "parti"),
    ("purposes", "purpos"),
    ("services", "servic"),
    ("users", "user"),
    ("visitors", "visitor"),
    ("wrote", "wrote"),
    ("writing", "write"),
    ("written", "written"),
];
