#include "opplus/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace opplus {

ProblemSpec ProblemSpec::kn_plus_i(int n, std::vector<int> lengths) {
    ProblemSpec s;
    s.variant = Variant::KnPlusI;
    s.n = n;
    s.lengths = std::move(lengths);
    std::sort(s.lengths.begin(), s.lengths.end());
    return s;
}

ProblemSpec ProblemSpec::kn_plus_i_uniform(int n, int m) {
    ProblemSpec s = (m > 0 && n % m == 0) ? kn_plus_i(n, std::vector<int>(n / m, m))
                                          : kn_plus_i(n, {});
    s.uniform_m = m;
    return s;
}

ProblemSpec ProblemSpec::kn_minus_i(int n, std::vector<int> lengths) {
    ProblemSpec s = kn_plus_i(n, std::move(lengths));
    s.variant = Variant::KnMinusI;
    return s;
}

ProblemSpec ProblemSpec::equipartite(int alpha, int part_size, int cycle_len) {
    ProblemSpec s;
    s.variant = Variant::Equipartite;
    s.alpha = alpha;
    s.part_size = part_size;
    s.n = alpha * part_size;
    if (cycle_len > 0 && s.n % cycle_len == 0)
        s.lengths.assign(s.n / cycle_len, cycle_len);
    return s;
}

bool ProblemSpec::uniform() const {
    return !lengths.empty() &&
           std::all_of(lengths.begin(), lengths.end(), [&](int l) { return l == lengths[0]; });
}

int ProblemSpec::factor_count_required() const {
    switch (variant) {
    case Variant::KnPlusI: return n / 2;
    case Variant::KnMinusI: return (n - 2) / 2;
    case Variant::Equipartite: return part_size * (alpha - 1) / 2;
    }
    return 0;
}

namespace {

const char* variant_token(Variant v) {
    switch (v) {
    case Variant::KnPlusI: return "KN_PLUS_I";
    case Variant::KnMinusI: return "KN_MINUS_I";
    case Variant::Equipartite: return "EQUIPARTITE";
    }
    return "?";
}

std::vector<Edge> canonical_matching(std::vector<Edge> pairs) {
    for (Edge& e : pairs)
        e = make_edge(e.first, e.second);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw CertificateParseError(line, "expected integer, got '" + tok + "'");
    }
}

// "key=value" with a mandatory key.
int parse_kv(const std::string& tok, const std::string& key, int line) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key)
        throw CertificateParseError(line, "expected " + key + "=<int>, got '" + tok + "'");
    return parse_int(tok.substr(eq + 1), line);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::string spaced;
    spaced.reserve(line.size());
    for (char c : line) {
        if (c == '(' || c == ')') {
            spaced += ' ';
            spaced += c;
            spaced += ' ';
        } else {
            spaced += c;
        }
    }
    std::istringstream in(spaced);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

Edge parse_pair(const std::string& tok, int n, int line) {
    auto dash = tok.find('-');
    if (dash == std::string::npos)
        throw CertificateParseError(line, "expected u-v pair, got '" + tok + "'");
    int u = parse_int(tok.substr(0, dash), line);
    int v = parse_int(tok.substr(dash + 1), line);
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw CertificateParseError(line, "pair vertex outside 0.." + std::to_string(n - 1) +
                                              " in '" + tok + "'");
    if (u == v)
        throw CertificateParseError(line, "degenerate pair '" + tok + "'");
    return make_edge(u, v);
}

} // namespace

FactorizationCertificate parse_certificate(const std::string& text) {
    FactorizationCertificate cert;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    bool have_matching = false;
    std::vector<std::pair<int, TwoFactor>> factors;

    while (std::getline(in, raw)) {
        ++lineno;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#')
            continue;
        std::vector<std::string> toks = tokenize(raw);

        if (!have_header) {
            if (toks.size() < 4 || toks[0] != "OPCERT" || toks[1] != "v1")
                throw CertificateParseError(lineno, "expected 'OPCERT v1 <variant> n=<n>' header");
            std::size_t at = 2;
            if (toks[at] == "KN_PLUS_I") {
                cert.spec.variant = Variant::KnPlusI;
            } else if (toks[at] == "KN_MINUS_I") {
                cert.spec.variant = Variant::KnMinusI;
            } else if (toks[at] == "EQUIPARTITE") {
                cert.spec.variant = Variant::Equipartite;
                if (toks.size() < 6)
                    throw CertificateParseError(lineno, "EQUIPARTITE header needs a=, k=, n=");
                cert.spec.alpha = parse_kv(toks[++at], "a", lineno);
                cert.spec.part_size = parse_kv(toks[++at], "k", lineno);
            } else {
                throw CertificateParseError(lineno, "unknown variant '" + toks[at] + "'");
            }
            ++at;
            if (at + 1 != toks.size())
                throw CertificateParseError(lineno, "trailing tokens after header");
            cert.spec.n = parse_kv(toks[at], "n", lineno);
            if (cert.spec.n <= 0)
                throw CertificateParseError(lineno, "n must be positive");
            if (cert.spec.variant == Variant::Equipartite &&
                cert.spec.alpha * cert.spec.part_size != cert.spec.n)
                throw CertificateParseError(lineno, "n does not equal a*k");
            have_header = true;
            continue;
        }

        if (toks[0] == "DUP" || toks[0] == "MISSING") {
            const bool dup = toks[0] == "DUP";
            if (dup != (cert.spec.variant == Variant::KnPlusI) ||
                (!dup && cert.spec.variant != Variant::KnMinusI))
                throw CertificateParseError(lineno, std::string(toks[0]) +
                                                        " line not valid for this variant");
            if (have_matching)
                throw CertificateParseError(lineno, "duplicate matching line");
            for (std::size_t i = 1; i < toks.size(); ++i)
                cert.special_matching.push_back(parse_pair(toks[i], cert.spec.n, lineno));
            if ((int)cert.special_matching.size() != cert.spec.n / 2)
                throw CertificateParseError(lineno, "matching must list n/2 pairs");
            have_matching = true;
            continue;
        }

        if (toks[0] == "FACTOR") {
            if (toks.size() < 2 || toks[1].empty() || toks[1].back() != ':')
                throw CertificateParseError(lineno, "expected 'FACTOR <idx>:'");
            int idx = parse_int(toks[1].substr(0, toks[1].size() - 1), lineno);
            TwoFactor f;
            std::size_t at = 2;
            while (at < toks.size()) {
                if (toks[at] != "(")
                    throw CertificateParseError(lineno, "expected '(' to open a cycle");
                ++at;
                Cycle c;
                std::set<int> seen;
                while (at < toks.size() && toks[at] != ")") {
                    int v = parse_int(toks[at], lineno);
                    if (v < 0 || v >= cert.spec.n)
                        throw CertificateParseError(lineno, "vertex " + std::to_string(v) +
                                                                " outside 0.." +
                                                                std::to_string(cert.spec.n - 1));
                    if (!seen.insert(v).second)
                        throw CertificateParseError(lineno, "duplicate vertex " +
                                                                std::to_string(v) + " in cycle");
                    c.push_back(v);
                    ++at;
                }
                if (at == toks.size())
                    throw CertificateParseError(lineno, "unterminated cycle");
                ++at; // ')'
                if (c.size() < 3)
                    throw CertificateParseError(lineno, "cycle needs at least 3 vertices");
                f.cycles.push_back(std::move(c));
            }
            if (f.cycles.empty())
                throw CertificateParseError(lineno, "factor with no cycles");
            factors.emplace_back(idx, std::move(f));
            continue;
        }

        throw CertificateParseError(lineno, "unrecognized line '" + toks[0] + "'");
    }

    if (!have_header)
        throw CertificateParseError(0, "missing OPCERT header");
    if (cert.spec.variant != Variant::Equipartite && !have_matching)
        throw CertificateParseError(0, cert.spec.variant == Variant::KnPlusI
                                           ? "missing DUP line"
                                           : "missing MISSING line");

    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].first != (int)i)
            throw CertificateParseError(0, "factor indices must be 0.." +
                                               std::to_string(factors.size() - 1));
        cert.factors.push_back(canonical_factor(factors[i].second));
    }
    cert.special_matching = canonical_matching(std::move(cert.special_matching));
    return cert;
}

std::string export_certificate(const FactorizationCertificate& cert) {
    std::ostringstream out;
    out << "OPCERT v1 " << variant_token(cert.spec.variant);
    if (cert.spec.variant == Variant::Equipartite)
        out << " a=" << cert.spec.alpha << " k=" << cert.spec.part_size;
    out << " n=" << cert.spec.n << "\n";

    if (cert.spec.variant != Variant::Equipartite) {
        out << (cert.spec.variant == Variant::KnPlusI ? "DUP" : "MISSING");
        for (Edge e : canonical_matching(cert.special_matching))
            out << ' ' << e.first << '-' << e.second;
        out << "\n";
    }

    for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        out << "FACTOR " << i << ":";
        TwoFactor f = canonical_factor(cert.factors[i]);
        for (const Cycle& c : f.cycles) {
            out << " (";
            for (std::size_t j = 0; j < c.size(); ++j)
                out << (j ? " " : "") << c[j];
            out << ")";
        }
        out << "\n";
    }
    return out.str();
}

FactorizationCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open certificate file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_certificate(buf.str());
}

void write_certificate_file(const std::string& path, const FactorizationCertificate& cert) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write certificate file: " + path);
    out << export_certificate(cert);
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace opplus
