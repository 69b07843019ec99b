#ifndef SGSR_FORMATS_HPP
#define SGSR_FORMATS_HPP

#include <string>
#include <string_view>

#include "sgsr/signed_graph.hpp"

namespace sgsr {

struct Graph6HeaderError : std::invalid_argument {
  explicit Graph6HeaderError(const std::string& what)
      : std::invalid_argument("graph6 header: " + what) {}
};
struct Graph6TruncatedError : std::invalid_argument {
  explicit Graph6TruncatedError(const std::string& what)
      : std::invalid_argument("graph6 bit stream: " + what) {}
};
struct SgParseError : std::invalid_argument {
  explicit SgParseError(const std::string& what)
      : std::invalid_argument(".sg parse: " + what) {}
};
struct SgSignTokenError : SgParseError {
  explicit SgSignTokenError(const std::string& tok)
      : SgParseError("bad sign token '" + tok + "' (expected + or -)") {}
};

// Short-form graph6 (n <= 62), one graph per line; the optional
// ">>graph6<<" prefix is accepted. The decoded graph is all-positive.
SignedGraph parse_graph6(std::string_view line);
// Encodes the underlying graph of g (signs are dropped).
std::string write_graph6(const SignedGraph& g);

// .sg signed edge-list format:
//   line 1: "n m"; then m lines "u v s" with s in {+,-}, vertices 0-based.
// Blank lines and "#"-comment lines are ignored on input; output edges are
// sorted lexicographically, so write_sg(parse_sg(t)) == t on canonical text.
SignedGraph parse_sg(std::string_view text);
std::string write_sg(const SignedGraph& g);

}  // namespace sgsr

#endif  // SGSR_FORMATS_HPP
