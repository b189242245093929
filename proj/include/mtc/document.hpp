#pragma once

// Plain-text code descriptions:
//
//   field GF(4) mod 1 1 1        # or GF(2^2); the modulus is optional
//   code C1                      # a linear code
//   matrix 2 8
//   1 0 w 1 0 w 1 w
//   0 1 w^2 0 1 w^2 1 w
//   code M1                      # an MT code
//   mt 2
//   blocks 6 2
//   shifts 1 w
//   gpm                          # l rows of '|'-separated polynomials,
//   w + x | w                    # or `matrix r c` with scalar rows
//   0 | w^2 + x

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtc/mtcode.hpp"

namespace mtc {

struct CodeBlock {
    std::string name;
    std::size_t line = 0;  // line of the `code` directive
    LinearCode code;
    std::optional<MTProfile> profile;
    std::optional<MTCode> mt;
};

class CodeDocument {
  public:
    CodeDocument(Field field, std::vector<CodeBlock> blocks) : field_(std::move(field)), blocks_(std::move(blocks)) {}

    const Field& field() const { return field_; }
    const std::vector<CodeBlock>& blocks() const { return blocks_; }
    /// Throws DomainError for an unknown name.
    const CodeBlock& get(const std::string& name) const;

  private:
    Field field_;
    std::vector<CodeBlock> blocks_;
};

/// Throws ParseError (1-based line and column) for malformed text and
/// DomainError when a well-formed block describes an invalid code.
CodeDocument parse_document(std::string_view text);
CodeDocument load_document(const std::string& path);

}  // namespace mtc
