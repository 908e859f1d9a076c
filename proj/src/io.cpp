#include "vass/io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace vass {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        pos = end + 1;
    }
    return lines;
}

Integer parse_integer(const std::string& tok, std::size_t line) {
    std::size_t start = (tok.size() > 1 && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (start == tok.size()) throw ParseError(ErrorCode::Syntax, line, "expected an integer, got '" + tok + "'");
    for (std::size_t k = start; k < tok.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(tok[k]))) {
            throw ParseError(ErrorCode::Syntax, line, "expected an integer, got '" + tok + "'");
        }
    }
    return Integer(tok.substr(tok[0] == '+' ? 1 : 0));
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
    const Integer v = parse_integer(tok, line);
    if (v < 0 || !v.fits_ulong_p()) throw ParseError(ErrorCode::Syntax, line, "expected an index, got '" + tok + "'");
    return v.get_ui();
}

IntVector parse_vector(const Line& line, std::size_t from, std::size_t dim, bool nonnegative) {
    const std::size_t have = line.tokens.size() - from;
    if (have != dim) {
        throw ParseError(ErrorCode::DimensionMismatch, line.number,
                         "expected " + std::to_string(dim) + " counters, got " + std::to_string(have));
    }
    IntVector v;
    for (std::size_t k = from; k < line.tokens.size(); ++k) {
        v.push_back(parse_integer(line.tokens[k], line.number));
        if (nonnegative && v.back() < 0) throw ParseError(ErrorCode::Syntax, line.number, "counters must be nonnegative");
    }
    return v;
}

void expect_arity(const Line& line, std::size_t n) {
    if (line.tokens.size() != n) {
        throw ParseError(ErrorCode::Syntax, line.number,
                         "'" + line.tokens[0] + "' takes " + std::to_string(n - 1) + " argument(s)");
    }
}

StateId lookup(const Vass& g, const std::string& name, std::size_t line) {
    auto s = g.find_state(name);
    if (!s) throw ParseError(ErrorCode::UnknownState, line, "unknown state '" + name + "'");
    return *s;
}

std::string join(const IntVector& v) {
    std::string out;
    for (const auto& x : v) out += " " + x.get_str();
    return out;
}

std::string join(const std::vector<TransitionId>& v) {
    std::string out;
    for (auto x : v) out += " " + std::to_string(x);
    return out;
}

} // namespace

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

const Configuration& VassDocument::config(const std::string& name) const {
    for (const auto& [n, c] : configs) {
        if (n == name) return c;
    }
    throw Error(ErrorCode::Precondition, "no configuration named '" + name + "'");
}

VassDocument parse_vass(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(ErrorCode::Syntax, 1, "missing 'vass dim=<d>' header");
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "vass" || head.tokens[1].rfind("dim=", 0) != 0) {
        throw ParseError(ErrorCode::Syntax, head.number, "expected 'vass dim=<d>'");
    }
    VassDocument doc{Vass(parse_index(head.tokens[1].substr(4), head.number)), {}};
    std::set<std::string> config_names;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::string& kw = line.tokens[0];
        auto add_state = [&](const std::string& id) {
            if (!is_identifier(id)) throw ParseError(ErrorCode::Syntax, line.number, "bad state id '" + id + "'");
            try {
                doc.vass.add_state(id);
            } catch (const Error& e) {
                throw ParseError(e.code(), line.number, "state '" + id + "' declared twice");
            }
        };
        if (kw == "state") {
            expect_arity(line, 2);
            add_state(line.tokens[1]);
        } else if (kw == "states") {
            for (std::size_t j = 1; j < line.tokens.size(); ++j) add_state(line.tokens[j]);
        } else if (kw == "trans") {
            if (line.tokens.size() < 3) throw ParseError(ErrorCode::Syntax, line.number, "'trans' needs two states");
            const StateId src = lookup(doc.vass, line.tokens[1], line.number);
            const StateId dst = lookup(doc.vass, line.tokens[2], line.number);
            doc.vass.add_transition(src, parse_vector(line, 3, doc.vass.dim(), false), dst);
        } else if (kw == "config") {
            if (line.tokens.size() < 3) throw ParseError(ErrorCode::Syntax, line.number, "'config' needs a name and a state");
            const std::string& name = line.tokens[1];
            if (!is_identifier(name)) throw ParseError(ErrorCode::Syntax, line.number, "bad configuration name");
            if (!config_names.insert(name).second) {
                throw ParseError(ErrorCode::DuplicateConfigName, line.number, "configuration '" + name + "' repeated");
            }
            const StateId s = lookup(doc.vass, line.tokens[2], line.number);
            doc.configs.emplace_back(name, Configuration{s, parse_vector(line, 3, doc.vass.dim(), true)});
        } else {
            throw ParseError(ErrorCode::Syntax, line.number, "unknown directive '" + kw + "'");
        }
    }
    return doc;
}

std::string serialize(const Vass& g, const std::vector<std::pair<std::string, Configuration>>& configs) {
    std::string out = "vass dim=" + std::to_string(g.dim()) + "\n";
    if (g.num_states() > 0) {
        out += "states";
        for (const auto& n : g.state_names()) out += " " + n;
        out += "\n";
    }
    for (const auto& t : g.transitions()) {
        out += "trans " + g.state_name(t.src) + " " + g.state_name(t.dst) + join(t.effect) + "\n";
    }
    for (const auto& [name, c] : configs) out += "config " + name + " " + g.state_name(c.state) + join(c.counters) + "\n";
    return out;
}

std::string serialize(const VassDocument& doc) { return serialize(doc.vass, doc.configs); }

Run parse_run(std::string_view text, const Vass& g) {
    Run run;
    bool have_start = false;
    bool have_word = false;
    for (const auto& line : tokenize(text)) {
        const std::string& kw = line.tokens[0];
        if (kw == "start") {
            if (line.tokens.size() < 2) throw ParseError(ErrorCode::Syntax, line.number, "'start' needs a state");
            run.start = Configuration{lookup(g, line.tokens[1], line.number), parse_vector(line, 2, g.dim(), true)};
            have_start = true;
        } else if (kw == "word") {
            for (std::size_t j = 1; j < line.tokens.size(); ++j) {
                const std::size_t t = parse_index(line.tokens[j], line.number);
                if (t >= g.num_transitions()) {
                    throw ParseError(ErrorCode::Syntax, line.number, "transition index " + std::to_string(t) + " out of range");
                }
                run.word.push_back(t);
            }
            have_word = true;
        } else {
            throw ParseError(ErrorCode::Syntax, line.number, "unknown directive '" + kw + "'");
        }
    }
    if (!have_start || !have_word) throw ParseError(ErrorCode::Syntax, 1, "a run needs 'start' and 'word' lines");
    return run;
}

std::string serialize_run(const Run& run, const Vass& g) {
    return "start " + g.state_name(run.start.state) + join(run.start.counters) + "\nword" + join(run.word) + "\n";
}

ThinCertificate parse_thin_certificate(std::string_view text, std::size_t dim) {
    ThinCertificate cert;
    bool have_a = false;
    for (const auto& line : tokenize(text)) {
        const std::string& kw = line.tokens[0];
        if (kw == "A") {
            expect_arity(line, 2);
            cert.a = parse_integer(line.tokens[1], line.number);
            have_a = true;
        } else if (kw == "beam") {
            if (line.tokens.size() < 2) throw ParseError(ErrorCode::Syntax, line.number, "'beam' needs a width");
            const Integer width = parse_integer(line.tokens[1], line.number);
            cert.beams.push_back(Beam{parse_vector(line, 2, dim, false), width});
        } else {
            throw ParseError(ErrorCode::Syntax, line.number, "unknown directive '" + kw + "'");
        }
    }
    if (!have_a) throw ParseError(ErrorCode::Syntax, 1, "missing 'A <n>'");
    return cert;
}

std::string serialize(const ThinCertificate& cert) {
    std::string out = "A " + cert.a.get_str() + "\n";
    for (const auto& b : cert.beams) out += "beam " + b.width.get_str() + join(b.direction) + "\n";
    return out;
}

ThickDocument parse_thick_certificate(std::string_view text) {
    ThickDocument doc;
    auto& cert = doc.certificate;
    bool have_a = false;
    bool have_split = false;
    std::map<std::string, bool> sub_a{{"forward", false}, {"backward", false}};
    for (const auto& line : tokenize(text)) {
        const std::string& kw = line.tokens[0];
        if (kw == "A") {
            expect_arity(line, 2);
            cert.a = parse_integer(line.tokens[1], line.number);
            have_a = true;
        } else if (kw == "split") {
            expect_arity(line, 2);
            cert.split = parse_index(line.tokens[1], line.number);
            have_split = true;
        } else if (kw == "witness") {
            expect_arity(line, 3);
            const std::size_t i1 = parse_index(line.tokens[1], line.number);
            const std::size_t i2 = parse_index(line.tokens[2], line.number);
            if (i1 == 0 || i2 == 0) throw ParseError(ErrorCode::BadIndices, line.number, "witness indices are 1-based");
            doc.witness = std::make_pair(i1 - 1, i2 - 1);
        } else if (kw == "forward" || kw == "backward") {
            SeqEnabledCertificate& sub = kw == "forward" ? cert.forward : cert.backward;
            if (line.tokens.size() < 2) throw ParseError(ErrorCode::Syntax, line.number, "'" + kw + "' needs a field");
            const std::string& field = line.tokens[1];
            if (field == "split") {
                expect_arity(line, 6);
                for (std::size_t j = 0; j < 4; ++j) sub.split[j] = parse_index(line.tokens[2 + j], line.number);
            } else if (field == "A") {
                expect_arity(line, 3);
                sub.a = parse_integer(line.tokens[2], line.number);
                sub_a[kw] = true;
            } else if (field.size() == 6 && field.rfind("cycle", 0) == 0 && field[5] >= '1' && field[5] <= '4') {
                auto& cycle = sub.cycles[static_cast<std::size_t>(field[5] - '1')];
                cycle.clear();
                for (std::size_t j = 2; j < line.tokens.size(); ++j) cycle.push_back(parse_index(line.tokens[j], line.number));
            } else {
                throw ParseError(ErrorCode::Syntax, line.number, "unknown field '" + field + "'");
            }
        } else {
            throw ParseError(ErrorCode::Syntax, line.number, "unknown directive '" + kw + "'");
        }
    }
    if (!have_a || !have_split) throw ParseError(ErrorCode::Syntax, 1, "a thick certificate needs 'A' and 'split'");
    if (!sub_a["forward"]) cert.forward.a = cert.a;
    if (!sub_a["backward"]) cert.backward.a = cert.a;
    return doc;
}

std::string serialize(const ThickDocument& doc) {
    const auto& cert = doc.certificate;
    std::string out = "A " + cert.a.get_str() + "\nsplit " + std::to_string(cert.split) + "\n";
    if (doc.witness) {
        out += "witness " + std::to_string(doc.witness->first + 1) + " " + std::to_string(doc.witness->second + 1) + "\n";
    }
    for (const auto* side : {"forward", "backward"}) {
        const auto& sub = std::string(side) == "forward" ? cert.forward : cert.backward;
        if (sub.a != cert.a) out += std::string(side) + " A " + sub.a.get_str() + "\n";
        out += std::string(side) + " split";
        for (auto k : sub.split) out += " " + std::to_string(k);
        out += "\n";
        for (std::size_t j = 0; j < 4; ++j) out += std::string(side) + " cycle" + std::to_string(j + 1) + join(sub.cycles[j]) + "\n";
    }
    return out;
}

} // namespace vass
