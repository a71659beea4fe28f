#pragma once

#include "gga/convert.hpp"
#include "gga/scaffold.hpp"

namespace gga {

class ParseError : public Error {
public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Line-oriented gga format ('#' comments):
///   gga NAME
///   vertex ID
///   points: p1 p2 ...
///   gens: perm ; perm ; ...
///   arc ID from U to V reverse RID      (self-reverse iff RID = ID, U = V)
///   points: q1 q2 ...                   (first arc of each pair)
///   gens: ...
///   embed: q->p q->p ...
///   inversion: perm                     (self-reverse arcs; defaults to ())
Gga parseGga(const std::string& text);
std::string serializeGga(const Gga& g);

/// Converter sub-formats, by leading keyword: bm / box / gog / lad.
Gga parseBm(const std::string& text);
Gga parseBox(const std::string& text);
Gga parseGog(const std::string& text);
LadDescription parseLad(const std::string& text);

/// Dispatch on the first keyword: gga files parse directly, converter
/// sub-formats are translated.
Gga parseAny(const std::string& text);

std::string serializeScaffolding(const Scaffolding& s, const Gga& g);
Scaffolding parseScaffolding(const std::string& text, const Gga& g);

std::string serializeLad(const LadDescription& lad);

}  // namespace gga
