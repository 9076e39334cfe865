#include "genexp/text.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace genexp {

namespace {

// Splits on the separator, keeping empty pieces; "" yields one empty piece.
std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& token) {
    if (token.empty()) {
        throw std::invalid_argument("empty number in text form");
    }
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + token + "'");
    }
    if (pos != token.size()) {
        throw std::invalid_argument("trailing characters in number: '" + token +
                                    "'");
    }
    return value;
}

std::string join_row(const std::vector<int>& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(row[i]);
    }
    return out;
}

std::vector<int> parse_row(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    for (const std::string& token : split(text, ',')) {
        out.push_back(parse_int(token));
    }
    return out;
}

}  // namespace

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    return join_row(p.parts());
}

Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "-") return Partition();
    return Partition(parse_row(text));
}

std::string format_tableau(const Tableau& t) {
    if (t.empty()) return "-";
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0) out += "/";
        out += join_row(t.rows()[r]);
    }
    return out;
}

Tableau parse_tableau(const std::string& text, int alphabet) {
    if (text.empty() || text == "-") {
        return Tableau(std::vector<std::vector<int>>{}, alphabet);
    }
    std::vector<std::vector<int>> rows;
    for (const std::string& row : split(text, '/')) {
        rows.push_back(parse_row(row));
    }
    return Tableau(std::move(rows), alphabet);
}

std::string format_tableau_barred(const Tableau& t) {
    if (t.empty()) return "-";
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0) out += "/";
        const auto& row = t.rows()[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ",";
            const int v = row[c];
            out += std::to_string((v + 1) / 2);
            if (v % 2 == 0) out += "'";
        }
    }
    return out;
}

std::string format_skew(const SkewTableau& t) {
    std::string out =
        format_partition(t.outer()) + "|" + format_partition(t.inner()) + "|";
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0) out += "/";
        out += join_row(t.rows()[r]);
    }
    return out;
}

SkewTableau parse_skew(const std::string& text, int alphabet) {
    const std::vector<std::string> parts = split(text, '|');
    if (parts.size() != 3) {
        throw std::invalid_argument("skew text form needs outer|inner|rows");
    }
    const Partition outer = parse_partition(parts[0]);
    const Partition inner = parse_partition(parts[1]);
    std::vector<std::vector<int>> rows;
    if (!outer.empty()) {
        for (const std::string& row : split(parts[2], '/')) {
            rows.push_back(parse_row(row));
        }
    } else if (!parts[2].empty()) {
        throw std::invalid_argument("rows given for an empty outer shape");
    }
    return SkewTableau(outer, inner, std::move(rows), alphabet);
}

std::string format_monomial(const Monomial& m) {
    if (m.empty()) return "1";
    std::string vars;
    for (const auto& [var, exp] : m) {
        if (!vars.empty()) vars += "*";
        vars += var == 0 ? "t" : "t_" + std::to_string(var);
        if (exp != 1) vars += "^" + std::to_string(exp);
    }
    return vars;
}

Monomial parse_monomial(const std::string& text) {
    if (text == "1") return {};
    Monomial m;
    int last_var = -1;
    for (const std::string& factor : split(text, '*')) {
        if (factor.empty() || factor[0] != 't') {
            throw std::invalid_argument("bad monomial factor: '" + factor + "'");
        }
        std::string body = factor.substr(1);
        int exp = 1;
        const std::size_t caret = body.find('^');
        if (caret != std::string::npos) {
            exp = parse_int(body.substr(caret + 1));
            body = body.substr(0, caret);
        }
        int var = 0;
        if (!body.empty()) {
            if (body[0] != '_') {
                throw std::invalid_argument("bad monomial factor: '" + factor +
                                            "'");
            }
            var = parse_int(body.substr(1));
        }
        if (var <= last_var || exp < 1) {
            throw std::invalid_argument("monomial not canonical: '" + text + "'");
        }
        m.push_back({var, exp});
        last_var = var;
    }
    return m;
}

}  // namespace genexp
