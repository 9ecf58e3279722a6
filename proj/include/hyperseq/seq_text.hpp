#ifndef HYPERSEQ_SEQ_TEXT_HPP
#define HYPERSEQ_SEQ_TEXT_HPP

#include "hyperseq/seqcore.hpp"

#include <string>
#include <string_view>

namespace hyperseq {

struct SeqParseError : std::invalid_argument {
    SeqParseError(std::string message, std::size_t position)
        : std::invalid_argument(std::move(message)), position(position) {}
    std::size_t position;
};

/// Parses a sequence literal:
///   ratfun(num; den)          coefficient lists lowest-degree-first, comma-separated
///   masked(m; f_0 | ... | f_{m-1})   each branch a ratfun(...) or a bare rational
///   patch(s; i=v, i=v, ...)
///   const q
/// Rationals are written p/q or p. Throws SeqParseError on malformed input.
EventualSeq parse_seq(std::string_view text);

/// Canonical literal for s; parse_seq(print_seq(s)) == s exactly.
std::string print_seq(const EventualSeq& s);

std::string print_ratfun(const RationalFunc& f);

} // namespace hyperseq

#endif
