#include "qmf/qexp_io.hpp"

#include <istream>
#include <sstream>

namespace qmf {

namespace {

constexpr const char* kVersionLine = "# qexp 1";

bool split_two(const std::string& line, std::string& a, std::string& b) {
    auto sp = line.find(' ');
    if (sp == std::string::npos) return false;
    a = line.substr(0, sp);
    b = line.substr(sp + 1);
    return !a.empty() && !b.empty() && b.find(' ') == std::string::npos;
}

long parse_long_field(const std::string& text, const char* what, long line_no) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + ": " + text, line_no);
    }
}

} // namespace

FormExpansion parse_qexp(std::istream& in) {
    std::string line;
    long line_no = 0;

    if (!std::getline(in, line)) throw ParseError("empty input", 1);
    ++line_no;
    if (line != kVersionLine) throw ParseError("missing version line '" + std::string(kVersionLine) + "'", line_no);

    bool have_tw = false, have_level = false, have_char = false, have_order = false,
         have_prec = false;
    long twice_weight = 0, level = 0, order = 1, prec = 0;
    std::string character_spec;

    while (have_tw + have_level + have_char + have_order + have_prec < 5) {
        if (!std::getline(in, line)) throw ParseError("incomplete header", line_no + 1);
        ++line_no;
        std::string key, value;
        if (!split_two(line, key, value)) throw ParseError("bad header line: " + line, line_no);
        if (key == "twice_weight") {
            twice_weight = parse_long_field(value, "twice_weight", line_no);
            have_tw = true;
        } else if (key == "level") {
            level = parse_long_field(value, "level", line_no);
            have_level = true;
        } else if (key == "character") {
            character_spec = value;
            have_char = true;
        } else if (key == "order") {
            order = parse_long_field(value, "order", line_no);
            have_order = true;
        } else if (key == "prec") {
            prec = parse_long_field(value, "prec", line_no);
            have_prec = true;
        } else {
            throw ParseError("unknown header key: " + key, line_no);
        }
    }
    if (twice_weight < 1) throw ParseError("twice_weight must be >= 1", line_no);
    if (level < 1) throw ParseError("level must be >= 1", line_no);
    if (order < 1) throw ParseError("order must be >= 1", line_no);
    if (prec < 1) throw ParseError("prec must be >= 1", line_no);

    DirichletCharacter chi = [&] {
        try {
            return parse_character(character_spec);
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
    }();

    TruncatedQSeries series(prec);
    long last_index = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string idx_text, value_text;
        if (!split_two(line, idx_text, value_text))
            throw ParseError("bad coefficient line: " + line, line_no);
        long n = parse_long_field(idx_text, "coefficient index", line_no);
        if (n < 0 || n >= prec)
            throw IndexOutOfRange("coefficient index " + std::to_string(n) +
                                      " outside prec " + std::to_string(prec),
                                  line_no);
        if (n == last_index) throw DuplicateIndex("duplicate coefficient index " + std::to_string(n), line_no);
        if (n < last_index) throw ParseError("coefficient indices must increase", line_no);
        last_index = n;
        RingValue v = [&] {
            try {
                return parse_ring_value(value_text);
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no);
            }
        }();
        if (!v.is_rational() && v.ring_order() != order)
            throw ParseError("coefficient order " + std::to_string(v.ring_order()) +
                                 " does not match header order " + std::to_string(order),
                             line_no);
        series.set_coefficient(n, std::move(v));
    }
    return FormExpansion{twice_weight, level, std::move(chi), std::move(series), false};
}

FormExpansion parse_qexp(const std::string& content) {
    std::istringstream in(content);
    return parse_qexp(in);
}

std::string write_qexp(const FormExpansion& f) {
    std::ostringstream out;
    out << kVersionLine << "\n";
    out << "twice_weight " << f.twice_weight << "\n";
    out << "level " << f.level << "\n";
    out << "character " << f.character.spec() << "\n";
    out << "order " << f.series.ring_order() << "\n";
    out << "prec " << f.prec() << "\n";
    for (long n = 0; n < f.prec(); ++n) {
        const RingValue& c = f.series.coefficient(n);
        if (!c.is_zero()) out << n << ' ' << c.str() << "\n";
    }
    return out.str();
}

} // namespace qmf
