#include "kraw/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "kraw/errors.hpp"

namespace kraw {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw DomainError("malformed JSON");
    }
    return j;
}

// Type mismatches inside nlohmann surface as its own exception family;
// collapse them into DomainError so callers see one kind of parse failure.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

Int int_from_json(const json& v) {
    if (v.is_string()) return parse_int(v.get<std::string>());
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    throw DomainError("expected an integer entry");
}

Rat rat_from_json(const json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    throw DomainError("expected a rational entry");
}

Rat rat_from_numden(const json& v) {
    if (v.is_object()) {
        if (!v.contains("num") || !v.contains("den")) {
            throw DomainError("rational object needs num and den");
        }
        const Int num = int_from_json(v.at("num"));
        const Int den = int_from_json(v.at("den"));
        if (den == 0) throw DomainError("zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    return rat_from_json(v);
}

template <typename T, typename FromJson>
Matrix<T> matrix_from_json(const std::string& text, FromJson from) {
    const json j = parse_text(text);
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries")) {
        throw DomainError("matrix JSON needs rows, cols and entries");
    }
    const auto rows = j.at("rows").get<long long>();
    const auto cols = j.at("cols").get<long long>();
    if (rows < 1 || cols < 1) {
        throw DomainError("matrix dimensions must be positive");
    }
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows)) {
        throw DomainError("entry grid does not match rows");
    }
    Matrix<T> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != m.cols()) {
            throw DomainError("entry row does not match cols");
        }
        for (std::size_t jcol = 0; jcol < m.cols(); ++jcol) {
            m(i, jcol) = from(row[jcol]);
        }
    }
    return m;
}

template <typename T, typename ToToken>
std::string matrix_to_json(const Matrix<T>& m, ToToken token) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(token(m(i, j)));
        }
        entries.push_back(std::move(row));
    }
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(entries);
    return j.dump();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<std::string>> csv_cells(const std::string& text) {
    std::vector<std::vector<std::string>> grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        grid.push_back(split(line, ','));
    }
    if (grid.empty()) throw DomainError("empty CSV");
    for (const auto& row : grid) {
        if (row.size() != grid.front().size()) {
            throw DomainError("ragged CSV rows");
        }
    }
    return grid;
}

template <typename T, typename FromToken>
Matrix<T> matrix_from_csv(const std::string& text, FromToken from) {
    const auto grid = csv_cells(text);
    Matrix<T> m(grid.size(), grid.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j) = from(grid[i][j]);
        }
    }
    return m;
}

template <typename T>
std::string matrix_to_csv(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <typename T>
std::string matrix_pretty(const Matrix<T>& m) {
    std::vector<std::size_t> widths(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            widths[j] = std::max(widths[j], to_string(m(i, j)).size());
        }
    }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string cell = to_string(m(i, j));
            if (j) out += ' ';
            out.append(widths[j] - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

json rat_to_numden(const Rat& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

} // namespace

std::string to_json(const ExactMatrix& m) {
    return matrix_to_json(m, [](const Int& v) { return v.get_str(); });
}

std::string to_json(const RationalMatrix& m) {
    return matrix_to_json(m, [](const Rat& v) { return v.get_str(); });
}

ExactMatrix exact_matrix_from_json(const std::string& text) {
    return guarded([&] { return matrix_from_json<Int>(text, int_from_json); });
}

RationalMatrix rational_matrix_from_json(const std::string& text) {
    return guarded([&] { return matrix_from_json<Rat>(text, rat_from_json); });
}

std::string to_csv(const ExactMatrix& m) { return matrix_to_csv(m); }
std::string to_csv(const RationalMatrix& m) { return matrix_to_csv(m); }

ExactMatrix exact_matrix_from_csv(const std::string& text) {
    return matrix_from_csv<Int>(text, [](const std::string& t) { return parse_int(t); });
}

RationalMatrix rational_matrix_from_csv(const std::string& text) {
    return matrix_from_csv<Rat>(text, [](const std::string& t) { return parse_rat(t); });
}

std::string to_json(const PolyMatrix& m) {
    return matrix_to_json(m, [](const Poly& p) {
        json coeffs = json::array();
        for (const Int& c : p.coefficients()) coeffs.push_back(c.get_str());
        return coeffs;
    });
}

PolyMatrix poly_matrix_from_json(const std::string& text) {
    return guarded([&] {
        return matrix_from_json<Poly>(text, [](const json& v) {
            if (!v.is_array()) throw DomainError("polynomial entry must be an array");
            std::vector<Int> coeffs;
            coeffs.reserve(v.size());
            for (const json& c : v) coeffs.push_back(int_from_json(c));
            return Poly(std::move(coeffs));
        });
    });
}

std::string pretty(const ExactMatrix& m) { return matrix_pretty(m); }
std::string pretty(const RationalMatrix& m) { return matrix_pretty(m); }

std::string to_json(const FiniteDistribution& d) {
    json arr = json::array();
    for (const Rat& p : d.probs) arr.push_back(rat_to_numden(p));
    return arr.dump();
}

FiniteDistribution distribution_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_text(text);
        if (!j.is_array() || j.empty()) {
            throw DomainError("distribution JSON must be a nonempty array");
        }
        std::vector<Rat> probs;
        probs.reserve(j.size());
        for (const json& v : j) probs.push_back(rat_from_numden(v));
        return FiniteDistribution(Order(static_cast<int>(j.size()) - 1),
                                  std::move(probs));
    });
}

std::string to_json(const SiteDistribution& d) {
    json xi = json::array();
    json p = json::array();
    for (const Rat& v : d.values()) xi.push_back(rat_to_numden(v));
    for (const Rat& v : d.probabilities()) p.push_back(rat_to_numden(v));
    return json{{"xi", std::move(xi)}, {"p", std::move(p)}}.dump();
}

SiteDistribution site_distribution_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse_text(text);
        if (!j.is_object() || !j.contains("xi") || !j.contains("p") ||
            !j.at("xi").is_array() || !j.at("p").is_array()) {
            throw DomainError("site distribution JSON needs xi and p arrays");
        }
        std::vector<Rat> xi, p;
        for (const json& v : j.at("xi")) xi.push_back(rat_from_numden(v));
        for (const json& v : j.at("p")) p.push_back(rat_from_numden(v));
        return SiteDistribution(std::move(xi), std::move(p));
    });
}

std::string to_csv(const UrnTrajectory& t) {
    std::string out = "step,state\n";
    for (std::size_t i = 0; i < t.states.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(t.states[i]);
        out += '\n';
    }
    return out;
}

UrnTrajectory trajectory_from_csv(const std::string& text, Order n,
                                  std::uint64_t seed) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty trajectory");
    UrnTrajectory t{n, seed, {}};
    std::size_t expected_step = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != 2) throw DomainError("trajectory rows need two cells");
        unsigned long long step = 0;
        int state = 0;
        try {
            step = std::stoull(cells[0]);
            state = std::stoi(cells[1]);
        } catch (const std::logic_error&) {
            throw DomainError("malformed trajectory row: '" + line + "'");
        }
        if (step != expected_step) {
            throw DomainError("trajectory steps must count up from 0");
        }
        ++expected_step;
        t.states.push_back(state);
    }
    return t;
}

nlohmann::json json_of(const CheckReport& r) {
    json j;
    j["check"] = r.check;
    j["pass"] = r.pass;
    if (!r.pass) {
        json ce = json::object();
        for (const auto& [key, value] : r.counterexample) ce[key] = value;
        j["counterexample"] = std::move(ce);
    }
    return j;
}

std::string to_json(const CheckReport& r) { return json_of(r).dump(); }

std::string to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& q : v) arr.push_back(q.get_str());
    return arr.dump();
}

std::string to_csv(const std::vector<Rat>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    out += '\n';
    return out;
}

ExactMatrix exact_matrix_from_text(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return exact_matrix_from_json(text);
        break;
    }
    return exact_matrix_from_csv(text);
}

} // namespace kraw
