#pragma once

#include <filesystem>

#include "tsetlin/machine.hpp"
#include "tsetlin/text.hpp"

namespace tsetlin {

// Binary model container: 8-byte magic, u32 version, endianness byte,
// metadata (hyperparams, class labels, tokenizer config), vocabulary
// (length-prefixed UTF-8 terms), per class/per clause polarity + 2k
// little-endian u16 automaton states, trailing FNV-1a 64 checksum.
inline constexpr char kModelMagic[8] = {'T', 'M', 'M', 'O', 'D', 'E', 'L', '1'};
inline constexpr std::uint32_t kModelVersion = 1;

struct LoadedModel {
  MultiClassTsetlinMachine machine;
  Vocabulary vocabulary;
  TokenizerConfig tokenizer;
};

// Written atomically (temp file + rename).
void save_model(const MultiClassTsetlinMachine& machine,
                const Vocabulary& vocab, const TokenizerConfig& cfg,
                const std::filesystem::path& path);

// Throws on magic/version mismatch, truncation, or checksum failure.
LoadedModel load_model(const std::filesystem::path& path);

}  // namespace tsetlin
