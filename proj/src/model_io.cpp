#include "tsetlin/model_io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace tsetlin {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

class Writer {
 public:
  explicit Writer(const fs::path& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + path.string());
  }

  void bytes(const void* data, std::size_t n) {
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    checksum_ = fnv1a(checksum_, data, n);
  }
  void u8(std::uint8_t v) { bytes(&v, 1); }
  void u16(std::uint16_t v) {  // little endian
    std::uint8_t b[2] = {static_cast<std::uint8_t>(v),
                         static_cast<std::uint8_t>(v >> 8)};
    bytes(b, 2);
  }
  void u32(std::uint32_t v) {
    std::uint8_t b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    bytes(b, 4);
  }
  void u64(std::uint64_t v) {
    std::uint8_t b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    bytes(b, 8);
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    u64(bits);
  }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes(s.data(), s.size());
  }

  void finish() {
    std::uint64_t sum = checksum_;
    u64(sum);
    out_.flush();
    if (!out_) throw std::runtime_error("model write failed");
    out_.close();
  }

 private:
  std::ofstream out_;
  std::uint64_t checksum_ = kFnvOffset;
};

class Reader {
 public:
  explicit Reader(const fs::path& path) : in_(path, std::ios::binary) {
    if (!in_) throw std::runtime_error("cannot open model file: " + path.string());
  }

  void bytes(void* data, std::size_t n) {
    in_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n)
      throw std::runtime_error("truncated model file");
  }
  std::uint8_t u8() {
    std::uint8_t v;
    bytes(&v, 1);
    return v;
  }
  std::uint16_t u16() {
    std::uint8_t b[2];
    bytes(b, 2);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  }
  std::uint32_t u32() {
    std::uint8_t b[4];
    bytes(b, 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint8_t b[8];
    bytes(b, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() {
    std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  std::string str() {
    std::uint32_t n = u32();
    std::string s(n, '\0');
    if (n) bytes(s.data(), n);
    return s;
  }

 private:
  std::ifstream in_;
};

void verify_checksum(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path.string());
  in.seekg(0, std::ios::end);
  auto size = static_cast<std::uint64_t>(in.tellg());
  if (size < 8 + sizeof(kModelMagic))
    throw std::runtime_error("truncated model file");
  in.seekg(0);

  std::uint64_t h = kFnvOffset;
  std::uint64_t remaining = size - 8;
  std::vector<char> buf(1 << 16);
  while (remaining > 0) {
    auto chunk = static_cast<std::size_t>(
        std::min<std::uint64_t>(remaining, buf.size()));
    in.read(buf.data(), static_cast<std::streamsize>(chunk));
    if (static_cast<std::size_t>(in.gcount()) != chunk)
      throw std::runtime_error("truncated model file");
    h = fnv1a(h, buf.data(), chunk);
    remaining -= chunk;
  }
  std::uint64_t stored = 0;
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  for (int i = 0; i < 8; ++i) stored |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  if (stored != h) throw std::runtime_error("model checksum mismatch");
}

}  // namespace

void save_model(const MultiClassTsetlinMachine& machine,
                const Vocabulary& vocab, const TokenizerConfig& cfg,
                const fs::path& path) {
  if (vocab.size() != machine.num_features())
    throw std::invalid_argument("vocabulary size does not match model");

  fs::path tmp = path;
  tmp += ".tmp";
  {
    Writer w(tmp);
    w.bytes(kModelMagic, sizeof(kModelMagic));
    w.u32(kModelVersion);
    w.u8(1);  // little-endian state arrays

    const HyperParams& hp = machine.params();
    w.u32(hp.clauses_per_class);
    w.u32(hp.states_per_action);
    w.f64(hp.specificity);
    w.i32(hp.threshold);
    w.u32(hp.epochs);
    w.u64(hp.seed);

    w.u32(static_cast<std::uint32_t>(machine.num_classes()));
    for (const auto& label : machine.class_labels()) w.str(label);

    w.u8(cfg.lowercase ? 1 : 0);
    w.u8(cfg.strip_punctuation ? 1 : 0);
    w.u32(static_cast<std::uint32_t>(cfg.ngram_sizes.size()));
    for (std::uint32_t n : cfg.ngram_sizes) w.u32(n);
    w.u32(cfg.min_document_frequency);

    w.u32(static_cast<std::uint32_t>(vocab.size()));
    for (const auto& term : vocab.terms()) w.str(term);

    for (std::size_t c = 0; c < machine.num_classes(); ++c) {
      for (const Clause& clause : machine.machine(c).clauses()) {
        w.u8(clause.polarity() > 0 ? 1 : 0);
        for (std::uint16_t s : clause.states()) w.u16(s);
      }
    }
    w.finish();
  }
  fs::rename(tmp, path);
}

LoadedModel load_model(const fs::path& path) {
  verify_checksum(path);

  Reader r(path);
  char magic[sizeof(kModelMagic)];
  r.bytes(magic, sizeof(magic));
  if (std::memcmp(magic, kModelMagic, sizeof(magic)) != 0)
    throw std::runtime_error("not a model file (bad magic)");
  std::uint32_t version = r.u32();
  if (version != kModelVersion)
    throw std::runtime_error("unsupported model version " +
                             std::to_string(version));
  if (r.u8() != 1) throw std::runtime_error("unsupported endianness flag");

  HyperParams hp;
  hp.clauses_per_class = r.u32();
  hp.states_per_action = r.u32();
  hp.specificity = r.f64();
  hp.threshold = r.i32();
  hp.epochs = r.u32();
  hp.seed = r.u64();

  std::uint32_t n_classes = r.u32();
  std::vector<std::string> labels(n_classes);
  for (auto& l : labels) l = r.str();

  TokenizerConfig cfg;
  cfg.lowercase = r.u8() != 0;
  cfg.strip_punctuation = r.u8() != 0;
  cfg.ngram_sizes.clear();
  std::uint32_t n_sizes = r.u32();
  for (std::uint32_t i = 0; i < n_sizes; ++i) cfg.ngram_sizes.insert(r.u32());
  cfg.min_document_frequency = r.u32();

  std::uint32_t k = r.u32();
  std::vector<std::string> terms(k);
  for (auto& t : terms) t = r.str();

  MultiClassTsetlinMachine machine(k, labels, hp);
  std::vector<std::uint16_t> states(2 * static_cast<std::size_t>(k));
  for (std::uint32_t c = 0; c < n_classes; ++c) {
    for (std::uint32_t j = 0; j < hp.clauses_per_class; ++j) {
      int polarity = r.u8() ? 1 : -1;
      Clause& clause = machine.machine(c).clause(j);
      if (polarity != clause.polarity())
        throw std::runtime_error("clause polarity layout mismatch");
      for (auto& s : states) s = r.u16();
      clause.set_states(states);
    }
  }

  return {std::move(machine), Vocabulary(std::move(terms)), std::move(cfg)};
}

}  // namespace tsetlin
