#include "hankelwalk/rational.hpp"

#include "hankelwalk/error.hpp"

#include <algorithm>
#include <cctype>

namespace hankelwalk {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InsufficientTerms: return "InsufficientTerms";
        case ErrorKind::EmptyPrefix: return "EmptyPrefix";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::InsufficientWeights: return "InsufficientWeights";
        case ErrorKind::ZeroLeadingTerm: return "ZeroLeadingTerm";
        case ErrorKind::InconsistentMoments: return "InconsistentMoments";
        case ErrorKind::MalformedPadding: return "MalformedPadding";
        case ErrorKind::InvalidTuple: return "InvalidTuple";
        case ErrorKind::InvalidVertex: return "InvalidVertex";
        case ErrorKind::NotAdjacent: return "NotAdjacent";
        case ErrorKind::InvalidWalk: return "InvalidWalk";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::MismatchBug: return "MismatchBug";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                  : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorKind::ParseError, "not a rational \"p/q\": \"" + original + "\"");
    }
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in \"" + original + "\"");
    }
    if (negative) p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

}  // namespace hankelwalk
