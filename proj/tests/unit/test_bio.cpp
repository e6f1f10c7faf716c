#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "error_code.hpp"
#include "oracles.hpp"
#include "pepscan/bio/corpus.hpp"
#include "pepscan/bio/digest.hpp"
#include "pepscan/bio/fasta.hpp"
#include "json.hpp"

using namespace pepscan;
using namespace pepscan::bio;
using pepscan::testkit::code_of;

using Strings = std::vector<std::string>;

namespace {

DigestParams missed(int n) {
  DigestParams p;
  p.missed_cleavages = n;
  return p;
}

// Cleavage sites by direct rule: after K/R unless followed by P.
std::vector<std::size_t> cut_points(const std::string& s) {
  std::vector<std::size_t> cuts{0};
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if ((s[i] == 'K' || s[i] == 'R') && s[i + 1] != 'P') cuts.push_back(i + 1);
  }
  cuts.push_back(s.size());
  return cuts;
}

}  // namespace

TEST(Fasta, NormalizesResidues) {
  auto recs = parse_fasta(">A\nmk r\n");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].id, "A");
  EXPECT_EQ(recs[0].sequence, "MKR");
}

TEST(Fasta, HeaderSplitAndComments) {
  auto recs = parse_fasta("; comment\n>sp|P1|X  first protein\nMK\nLL\n\n>P2\r\nW\r\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].id, "sp|P1|X");
  EXPECT_EQ(recs[0].description, "first protein");
  EXPECT_EQ(recs[0].sequence, "MKLL");
  EXPECT_EQ(recs[1].id, "P2");
  EXPECT_EQ(recs[1].sequence, "W");
}

TEST(Fasta, Errors) {
  EXPECT_EQ(code_of([] { parse_fasta(""); }), ErrorCode::kNoRecords);
  EXPECT_EQ(code_of([] { parse_fasta("MK\n>A\nMK\n"); }), ErrorCode::kNoRecords);
  EXPECT_EQ(code_of([] { parse_fasta(">A\nMK1\n"); }), ErrorCode::kInvalidResidue);
  EXPECT_EQ(code_of([] { parse_fasta(">A\n>B\nMK\n"); }), ErrorCode::kEmptySequence);
  EXPECT_EQ(code_of([] { read_fasta("/nonexistent.fasta"); }), ErrorCode::kIo);
}

TEST(Fasta, WriteParseRoundTrip) {
  std::vector<FastaRecord> recs{{"P1", "long one", std::string(150, 'A')}, {"P2", "", "MK"}};
  std::ostringstream out;
  write_fasta(out, recs);
  EXPECT_EQ(parse_fasta(out.str()), recs);
  // 60 residues per line
  EXPECT_NE(out.str().find(std::string(60, 'A') + "\n"), std::string::npos);
  EXPECT_EQ(out.str().find(std::string(61, 'A')), std::string::npos);
}

TEST(Digest, Vectors) {
  EXPECT_EQ(digest_sequences("MKRPK", missed(0)), (Strings{"MK", "RPK"}));
  EXPECT_EQ(digest_sequences("AAAA", missed(0)), (Strings{"AAAA"}));
  EXPECT_EQ(digest_sequences("MKRK", missed(1)), (Strings{"MK", "R", "K", "MKR", "RK"}));
}

TEST(Digest, PeptideMetadata) {
  auto peps = digest("MKRK", missed(1));
  ASSERT_EQ(peps.size(), 5u);
  EXPECT_EQ(peps[3], (Peptide{"MKR", 0, 1}));
  EXPECT_EQ(peps[4], (Peptide{"RK", 2, 1}));
}

TEST(Digest, LengthFilterAndDedupe) {
  DigestParams p;
  p.min_len = 2;
  EXPECT_EQ(digest_sequences("MKRK", p), (Strings{"MK"}));
  p = missed(2);
  p.max_len = 2;
  EXPECT_EQ(digest_sequences("MKRK", p), (Strings{"MK", "R", "K", "RK"}));
  p = {};
  p.dedupe = true;
  EXPECT_EQ(digest_sequences("AKAKAK", p), (Strings{"AK"}));
}

TEST(Digest, ParameterErrors) {
  EXPECT_EQ(code_of([] { digest("MK", missed(4)); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { digest("MK", missed(-1)); }), ErrorCode::kInvalidArgument);
  DigestParams p;
  p.enzyme = "pepsin";
  EXPECT_EQ(code_of([&] { digest("MK", p); }), ErrorCode::kUnsupportedEnzyme);
  p = {};
  p.min_len = 5;
  p.max_len = 3;
  EXPECT_EQ(code_of([&] { digest("MK", p); }), ErrorCode::kInvalidArgument);
}

// Property: missed-0 pieces concatenate back to the protein, and every
// peptide with n missed cleavages spans n+1 consecutive pieces.
TEST(DigestProperty, CoverageAndMissedCleavageSpans) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto seq = testkit::random_string(rng, 1 + rng() % 120, "AKRPLM");
    std::string joined;
    for (const auto& s : digest_sequences(seq)) joined += s;
    ASSERT_EQ(joined, seq);

    const auto cuts = cut_points(seq);
    const int n = static_cast<int>(rng() % 4);
    std::vector<Peptide> expect;
    for (int m = 0; m <= n; ++m) {
      for (std::size_t i = 0; i + m + 1 < cuts.size(); ++i) {
        expect.push_back({seq.substr(cuts[i], cuts[i + m + 1] - cuts[i]), cuts[i], m});
      }
    }
    EXPECT_EQ(digest(seq, missed(n)), expect) << seq;
  }
}

TEST(Corpus, ScanTextAndLocate) {
  auto c = build_corpus({{"A", "", "MK"}, {"B", "", "LLR"}});
  EXPECT_EQ(c.scan_text(), "MK#LLR");
  ASSERT_EQ(c.boundaries().size(), 2u);
  EXPECT_EQ(c.boundaries()[1].begin, 3u);
  EXPECT_EQ(c.boundaries()[1].end, 6u);
  auto loc = c.locate(4);
  EXPECT_EQ(loc.record, 1u);
  EXPECT_EQ(loc.offset, 1u);
  EXPECT_EQ(c.locate(1).record, 0u);
}

TEST(Corpus, Errors) {
  EXPECT_EQ(code_of([] { build_corpus({}); }), ErrorCode::kEmptyCorpus);
  EXPECT_EQ(code_of([] { build_corpus({{"A", "", "MK"}}, 'K'); }), ErrorCode::kSentinelInAlphabet);
}

TEST(Corpus, Stats) {
  auto s = corpus_stats(build_corpus({{"A", "", "MK"}, {"B", "", "LLR"}}));
  EXPECT_EQ(s.record_count, 2u);
  EXPECT_EQ(s.residue_count, 5u);
  EXPECT_EQ(s.record_lengths, (std::vector<std::size_t>{2, 3}));
  auto doc = nlohmann::json::parse(s.to_json());
  EXPECT_EQ(doc["residue_count"], 5);
  EXPECT_NE(s.to_text().find("5"), std::string::npos);
}

TEST(Synthesize, ExactLengthAndDeterministic) {
  auto a = synthesize_corpus(100, 53093, 42);
  auto b = synthesize_corpus(100, 53093, 42);
  auto c = synthesize_corpus(100, 53093, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  ASSERT_EQ(a.size(), 100u);
  std::size_t total = 0;
  for (const auto& r : a) {
    EXPECT_FALSE(r.sequence.empty());
    total += r.sequence.size();
  }
  EXPECT_EQ(total, 53093u);
  EXPECT_EQ(a[0].id, "SYN00001");
  EXPECT_EQ(a[99].id, "SYN00100");
  EXPECT_EQ(build_corpus(a).scan_text().size(), 53093u + 99u);
}

TEST(PeptidePatterns, LimitTruncates) {
  auto recs = synthesize_corpus(10, 3000, 1);
  auto all = peptide_patterns(recs, {});
  auto some = peptide_patterns(recs, {}, 7);
  ASSERT_EQ(some.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(some[static_cast<ac::PatternId>(i)], all[static_cast<ac::PatternId>(i)]);
}
