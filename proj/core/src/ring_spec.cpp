#include "mf/ring_spec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mf/error.hpp"

namespace mf {

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  RingSpec parse_all() {
    RingSpec spec = parse();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  RingSpec parse() {
    RingSpec spec;
    if (consume("zmod:")) {
      spec.kind = RingSpec::Kind::Zmod;
      spec.modulus = number();
      if (spec.modulus < 2) fail("zmod modulus must be >= 2");
    } else if (consume("mat:") || consume("tri:")) {
      spec.kind = text_[pos_ - 4] == 'm' ? RingSpec::Kind::Matrix : RingSpec::Kind::Triangular;
      spec.dimension = number();
      if (spec.dimension < 1) fail("matrix dimension must be >= 1");
      expect(':');
      spec.parts.push_back(parse());
    } else if (consume("prod:")) {
      spec.kind = RingSpec::Kind::Product;
      spec.parts.push_back(parse());
      expect(',');
      spec.parts.push_back(parse());
    } else if (consume("sc:")) {
      spec.kind = RingSpec::Kind::StructureConstants;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',') ++pos_;
      spec.file = text_.substr(start, pos_ - start);
      if (spec.file.empty()) fail("sc: needs a file name");
    } else if (consume("int")) {
      spec.kind = RingSpec::Kind::Integers;
    } else {
      fail("expected zmod:, mat:, tri:, prod:, sc: or int");
    }
    return spec;
  }

  bool consume(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t number() {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ring spec '" + text_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::Zmod: return "zmod:" + std::to_string(modulus);
    case Kind::Matrix: return "mat:" + std::to_string(dimension) + ":" + parts.at(0).to_string();
    case Kind::Triangular:
      return "tri:" + std::to_string(dimension) + ":" + parts.at(0).to_string();
    case Kind::Product: return "prod:" + parts.at(0).to_string() + "," + parts.at(1).to_string();
    case Kind::StructureConstants: return "sc:" + file;
    case Kind::Integers: return "int";
  }
  return {};
}

RingSpec parse_ring_spec(const std::string& text) { return SpecParser(text).parse_all(); }

std::shared_ptr<const RingStructure> load_structure_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open structure constant file '" + path + "'");
  std::string line;
  std::size_t rank = 0;
  std::size_t modulus = 0;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  {
    std::istringstream head(line);
    if (!(head >> rank >> modulus)) throw ParseError(path + ": first line must be 'n modulus'");
  }
  std::vector<std::vector<std::vector<long>>> table(rank, std::vector<std::vector<long>>(rank));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      if (!std::getline(in, line)) throw ParseError(path + ": missing product line");
      std::istringstream row(line);
      long v = 0;
      while (row >> v) table[i][j].push_back(v);
      if (table[i][j].size() != rank) {
        throw ParseError(path + ": product line " + std::to_string(i * rank + j + 2) +
                         " must hold " + std::to_string(rank) + " integers");
      }
    }
  }
  return make_structure_constant_ring(rank, modulus, std::move(table), "sc:" + path);
}

FiniteRing build_ring(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Zmod: return FiniteRing(make_zmod(spec.modulus));
    case RingSpec::Kind::Matrix:
      return FiniteRing(make_matrix_ring(build_ring(spec.parts.at(0)), spec.dimension, false));
    case RingSpec::Kind::Triangular:
      return FiniteRing(make_matrix_ring(build_ring(spec.parts.at(0)), spec.dimension, true));
    case RingSpec::Kind::Product:
      return FiniteRing(
          make_product_ring(build_ring(spec.parts.at(0)), build_ring(spec.parts.at(1))));
    case RingSpec::Kind::StructureConstants:
      return FiniteRing(load_structure_constants(spec.file));
    case RingSpec::Kind::Integers:
      throw PreconditionFailed("'int' is the witnessed integer backend, not a finite ring");
  }
  throw ParseError("unhandled ring spec");
}

FiniteRing build_ring(const std::string& text) { return build_ring(parse_ring_spec(text)); }

}  // namespace mf
