#include "wrnet/network_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wrnet/errors.hpp"

namespace wrnet {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.'; }

class LineParser
{
public:
    LineParser(std::string_view line, std::size_t lineno, const std::map<std::string, std::size_t>* species)
        : s_(line), line_(lineno), species_(species)
    {
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const
    {
        throw ParseError(line_, pos + 1, msg);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ >= s_.size();
    }

    bool consume(std::string_view tok)
    {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    std::string name()
    {
        skip_ws();
        auto start = pos_;
        if (pos_ >= s_.size() || !name_start(s_[pos_])) fail("expected a species name");
        while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    RatVec complex()
    {
        RatVec v = zeros(species_->size());
        skip_ws();
        auto start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '0') {
            auto p = pos_ + 1;
            while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
            bool bare_zero = p >= s_.size() || s_[p] == '-' || s_[p] == '<' || s_[p] == ':' || s_[p] == '#';
            if (bare_zero && !(pos_ + 1 < s_.size() && number_char(s_[pos_ + 1]))) {
                ++pos_;
                return v;
            }
        }
        for (;;) {
            skip_ws();
            Rational coef = 1;
            if (pos_ < s_.size() && number_char(s_[pos_])) {
                auto num_start = pos_;
                while (pos_ < s_.size() && number_char(s_[pos_])) ++pos_;
                auto text = s_.substr(num_start, pos_ - num_start);
                try {
                    coef = parse_rational(text);
                } catch (const std::invalid_argument&) {
                    fail_at(num_start, "malformed coefficient '" + std::string(text) + "'");
                }
                if (coef <= 0) fail_at(num_start, "coefficient must be positive");
            }
            skip_ws();
            auto name_pos = pos_;
            auto sp = name();
            auto it = species_->find(sp);
            if (it == species_->end()) fail_at(name_pos, "unknown species '" + sp + "'");
            v[it->second] += coef;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '+') {
                ++pos_;
                continue;
            }
            break;
        }
        if (pos_ == start) fail("expected a complex");
        return v;
    }

    Rational rate()
    {
        skip_ws();
        auto start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ',' &&
               s_[pos_] != '#')
            ++pos_;
        auto text = s_.substr(start, pos_ - start);
        if (text.empty()) fail_at(start, "expected a rate");
        Rational r;
        try {
            r = parse_rational(text);
        } catch (const std::invalid_argument&) {
            fail_at(start, "malformed rate '" + std::string(text) + "'");
        }
        if (r <= 0) fail_at(start, "rate must be positive");
        return r;
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
    const std::map<std::string, std::size_t>* species_;
};

std::string_view strip_comment(std::string_view line)
{
    auto h = line.find('#');
    return h == std::string_view::npos ? line : line.substr(0, h);
}

}  // namespace

Network parse_network(std::string_view text)
{
    Network net;
    std::map<std::string, std::size_t> index;
    bool have_species = false;

    struct Reaction
    {
        RatVec source, target;
        std::optional<Rational> rate;
        std::size_t line;
    };
    std::vector<Reaction> reactions;

    std::size_t lineno = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        auto raw = text.substr(begin, end - begin);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        begin = end + 1;
        ++lineno;

        auto line = strip_comment(raw);
        LineParser p(line, lineno, &index);
        if (p.at_end()) continue;

        if (!have_species) {
            if (!p.consume("species")) p.fail("expected 'species' declaration before reactions");
            while (!p.at_end()) {
                auto pos = p.pos();
                auto sp = p.name();
                if (sp == "species") p.fail_at(pos, "'species' is reserved");
                if (!index.emplace(sp, index.size()).second) p.fail_at(pos, "duplicate species '" + sp + "'");
                net.species.push_back(sp);
            }
            if (net.species.empty()) p.fail("species list is empty");
            have_species = true;
            continue;
        }

        auto lhs = p.complex();
        bool reversible;
        if (p.consume("<->"))
            reversible = true;
        else if (p.consume("->"))
            reversible = false;
        else
            p.fail("expected '->' or '<->'");
        auto rhs_pos = p.pos();
        auto rhs = p.complex();
        if (lhs == rhs) p.fail_at(rhs_pos, "reaction has identical source and target");

        std::optional<Rational> fwd, back;
        if (p.consume(":")) {
            fwd = p.rate();
            if (reversible) {
                if (!p.consume(",")) p.fail("'<->' needs two rates 'forward, backward'");
                back = p.rate();
            }
        }
        if (!p.at_end()) p.fail("unexpected text after reaction");

        reactions.push_back({lhs, rhs, fwd, lineno});
        if (reversible) reactions.push_back({rhs, lhs, back, lineno});
    }
    if (!have_species) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing 'species' declaration");
    if (reactions.empty()) throw ParseError(lineno == 0 ? 1 : lineno, 1, "network has no reactions");

    bool any_rate = false, all_rates = true;
    for (const auto& r : reactions) {
        if (r.rate) any_rate = true;
        else all_rates = false;
    }
    std::set<std::pair<RatVec, RatVec>> seen;
    std::vector<std::pair<RatVec, RatVec>> pairs;
    for (const auto& r : reactions) {
        if (any_rate && !r.rate) throw ParseError(r.line, 1, "rates must be given for all reactions or none");
        if (!seen.insert({r.source, r.target}).second)
            throw ParseError(r.line, 1, "duplicate reaction");
        pairs.emplace_back(r.source, r.target);
    }
    net.graph = EGraph::from_reactions(net.species.size(), pairs);
    if (any_rate && all_rates) {
        std::vector<Rational> k;
        for (const auto& r : reactions) k.push_back(*r.rate);
        net.rates = RateVector(net.graph, std::move(k));
    }
    return net;
}

Network read_network_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_network(ss.str());
}

std::string format_complex(const RatVec& coords, const std::vector<std::string>& species)
{
    if (coords.size() != species.size()) throw PreconditionError("complex does not match species list");
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        if (coords[i] < 0)
            throw PreconditionError("complex " + to_string(coords) + " has a negative coefficient");
        if (!out.empty()) out += " + ";
        if (coords[i] != 1) out += coords[i].get_str();
        out += species[i];
    }
    return out.empty() ? "0" : out;
}

std::string print_network(const std::vector<std::string>& species, const EGraph& g,
                          const std::optional<RateVector>& rates)
{
    std::string out = "species";
    for (const auto& s : species) out += " " + s;
    out += "\n";
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        out += format_complex(g.vertex(g.edge(e).source), species) + " -> " +
               format_complex(g.vertex(g.edge(e).target), species);
        if (rates) out += " : " + (*rates)[e].get_str();
        out += "\n";
    }
    return out;
}

std::string print_network(const Network& n) { return print_network(n.species, n.graph, n.rates); }

}  // namespace wrnet
