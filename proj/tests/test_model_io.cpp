#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "tsetlin/model_io.hpp"
#include "tsetlin/rng.hpp"

using namespace tsetlin;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) {
    path = fs::temp_directory_path() / (name + std::to_string(::getpid()));
  }
  ~TempFile() { fs::remove(path); }
};

MultiClassTsetlinMachine trained_toy_model(const Vocabulary& vocab,
                                           const TokenizerConfig& cfg) {
  HyperParams hp;
  hp.clauses_per_class = 6;
  hp.states_per_action = 50;
  hp.specificity = 3.0;
  hp.threshold = 4;
  hp.epochs = 5;
  hp.seed = 21;
  MultiClassTsetlinMachine mtm(static_cast<std::uint32_t>(vocab.size()),
                               {"neg", "pos"}, hp);
  Corpus corpus;
  corpus.class_labels = {"neg", "pos"};
  Rng rng(8);
  for (int i = 0; i < 80; ++i) {
    BitDocument doc;
    doc.bits = BitVector(vocab.size());
    for (std::size_t j = 0; j < vocab.size(); ++j)
      doc.bits.set(j, rng.bernoulli(0.4));
    doc.label = doc.bits.get(0) ? 1 : 0;
    corpus.documents.push_back(std::move(doc));
  }
  mtm.fit(corpus);
  (void)cfg;
  return mtm;
}

}  // namespace

TEST_CASE("model round trip preserves states and predictions") {
  Vocabulary vocab({"alpha", "beta", "gamma", "delta", "eps"});
  TokenizerConfig cfg;
  cfg.ngram_sizes = {1, 2};
  cfg.min_document_frequency = 2;
  MultiClassTsetlinMachine mtm = trained_toy_model(vocab, cfg);

  TempFile f("tm_model_roundtrip_");
  save_model(mtm, vocab, cfg, f.path);
  LoadedModel loaded = load_model(f.path);

  CHECK(loaded.vocabulary.terms() == vocab.terms());
  CHECK(loaded.tokenizer.ngram_sizes == cfg.ngram_sizes);
  CHECK(loaded.tokenizer.min_document_frequency == 2);
  CHECK(loaded.machine.class_labels() == mtm.class_labels());
  CHECK(loaded.machine.params().specificity == mtm.params().specificity);

  for (std::size_t c = 0; c < 2; ++c)
    for (std::uint32_t i = 0; i < 6; ++i)
      REQUIRE(loaded.machine.machine(c).clause(i).states() ==
              mtm.machine(c).clause(i).states());

  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    BitVector x(vocab.size());
    for (std::size_t j = 0; j < vocab.size(); ++j)
      x.set(j, rng.bernoulli(0.5));
    REQUIRE(loaded.machine.classify(x) == mtm.classify(x));
  }
}

TEST_CASE("save is deterministic byte for byte") {
  Vocabulary vocab({"a", "b", "c"});
  TokenizerConfig cfg;
  MultiClassTsetlinMachine mtm = trained_toy_model(vocab, cfg);

  TempFile f1("tm_model_det1_"), f2("tm_model_det2_");
  save_model(mtm, vocab, cfg, f1.path);
  save_model(mtm, vocab, cfg, f2.path);

  std::ifstream a(f1.path, std::ios::binary), b(f2.path, std::ios::binary);
  std::string sa((std::istreambuf_iterator<char>(a)),
                 std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)),
                 std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  CHECK_FALSE(sa.empty());
}

TEST_CASE("corruption and version errors") {
  Vocabulary vocab({"a", "b", "c"});
  TokenizerConfig cfg;
  MultiClassTsetlinMachine mtm = trained_toy_model(vocab, cfg);
  TempFile f("tm_model_corrupt_");
  save_model(mtm, vocab, cfg, f.path);

  SUBCASE("a flipped byte fails the checksum") {
    std::fstream io(f.path,
                    std::ios::binary | std::ios::in | std::ios::out);
    io.seekp(40);
    char byte;
    io.seekg(40);
    io.get(byte);
    byte = static_cast<char>(byte ^ 0x5a);
    io.seekp(40);
    io.put(byte);
    io.close();
    CHECK_THROWS_WITH_AS(load_model(f.path), "model checksum mismatch",
                         std::runtime_error);
  }

  SUBCASE("truncated file is rejected") {
    auto size = fs::file_size(f.path);
    fs::resize_file(f.path, size - 5);
    CHECK_THROWS_AS(load_model(f.path), std::runtime_error);
  }

  SUBCASE("bad magic is rejected") {
    std::ofstream out(f.path, std::ios::binary);
    out << "NOTAMODELFILE_____________________";
    out.close();
    CHECK_THROWS_AS(load_model(f.path), std::runtime_error);
  }

  SUBCASE("unsupported version is an explicit error") {
    // version is the u32 right after the 8-byte magic; patch it and
    // re-stamp the checksum
    std::ifstream in(f.path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    in.close();
    bytes[8] = 99;
    // recompute FNV-1a over all but the trailing 8 bytes
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i + 8 < bytes.size(); ++i) {
      h ^= static_cast<unsigned char>(bytes[i]);
      h *= 0x100000001b3ULL;
    }
    for (int i = 0; i < 8; ++i)
      bytes[bytes.size() - 8 + i] = static_cast<char>(h >> (8 * i));
    std::ofstream out(f.path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    try {
      load_model(f.path);
      FAIL("expected an error");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("version") != std::string::npos);
    }
  }

  SUBCASE("missing file is an error") {
    CHECK_THROWS_AS(load_model(f.path.string() + ".nope"), std::runtime_error);
  }
}
