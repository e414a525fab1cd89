#include "io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gsp4::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> r;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) r.push_back(item);
    return r;
}

Int parse_int(const std::string& s) {
    std::size_t used = 0;
    Int v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ValidationError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw ValidationError("not an integer: '" + s + "'");
    return v;
}

void check_prime(const json& j, Int p) {
    if (j.contains("p") && j.at("p").get<Int>() != p)
        throw ValidationError("fixture is for p = " + std::to_string(j.at("p").get<Int>()) + ", run uses p = " +
                              std::to_string(p));
}

}  // namespace

std::string schema(const std::string& kind) { return "gsp4." + kind + "/" + kSchemaVersion; }

Weight parse_weight(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 3) throw ValidationError("expected a,b,c but got '" + text + "'");
    return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

json to_json(const Weight& l) { return json::array({l.a, l.b, l.c}); }

Weight weight_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ValidationError("a weight is a JSON array [a, b, c]");
    return {j[0].get<Int>(), j[1].get<Int>(), j[2].get<Int>()};
}

json to_json(const ExtAffine& x) {
    return {{"t", to_json(x.t)}, {"w", x.w.word().empty() ? "e" : x.w.word()}, {"text", to_string(x)}};
}

json to_json(const DualElement& z) {
    return {{"w", z.w.word().empty() ? "e" : z.w.word()}, {"t", to_json(z.t)}, {"text", to_string(z)}};
}

json to_json(const Tuple& x) {
    json r = json::array();
    for (const auto& e : x) r.push_back(to_string(e));
    return r;
}

json to_json(const APPair& q) { return {{"w1", to_json(q.w1)}, {"w2", to_json(q.w2)}}; }

json to_json(const SerreWeight& s) {
    json l = json::array();
    for (const auto& w : s.lambda) l.push_back(to_json(w));
    return {{"lambda", l}, {"text", to_string(s)}, {"depth", s.depth()}};
}

json to_json(const TamePresentation& t) {
    json e = json::array();
    for (int j = 0; j < t.f(); ++j) {
        const auto& w = t.s[j].word();
        e.push_back({{"s", w.empty() ? "e" : w}, {"mu", to_json(t.mu[j])}});
    }
    return {{"p", t.p}, {"embeddings", e}, {"depth", t.depth()}};
}

json to_json(const AdjacencyInstance& inst) {
    json w = json::array();
    for (const auto& m : inst.warnings) w.push_back(m);
    return {{"pair", to_json(inst.pair)},     {"s", to_string(inst.s)},
            {"tau", to_json(inst.tau)},       {"rhobar0", to_json(inst.rhobar0)},
            {"sigma1", to_json(inst.sigma1)}, {"sigma2", to_json(inst.sigma2)},
            {"warnings", w}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

TamePresentation load_presentation(const std::string& arg, Int p) {
    std::vector<FiniteWeyl> s;
    std::vector<Weight> mu;
    if (std::filesystem::exists(arg)) {
        json j = read_json_file(arg);
        check_prime(j, p);
        try {
            for (const auto& e : j.at("embeddings")) {
                s.push_back(FiniteWeyl::from_word(e.at("s").get<std::string>()));
                mu.push_back(weight_from_json(e.at("mu")));
            }
        } catch (const json::exception& e) {
            throw ValidationError("malformed presentation fixture '" + arg + "': " + e.what());
        }
    } else {
        for (const auto& part : split(arg, ';')) {
            auto colon = part.find(':');
            if (colon == std::string::npos)
                throw ValidationError("presentation '" + arg + "' is neither a file nor word:a,b,c entries");
            s.push_back(FiniteWeyl::from_word(part.substr(0, colon)));
            mu.push_back(parse_weight(part.substr(colon + 1)));
        }
    }
    return make_presentation(s, mu, p);
}

SerreWeight load_serre_weight(const std::string& arg, Int p) {
    std::vector<Weight> l;
    if (std::filesystem::exists(arg)) {
        json j = read_json_file(arg);
        check_prime(j, p);
        try {
            for (const auto& w : j.at("lambda")) l.push_back(weight_from_json(w));
        } catch (const json::exception& e) {
            throw ValidationError("malformed weight fixture '" + arg + "': " + e.what());
        }
    } else {
        for (const auto& part : split(arg, ';')) l.push_back(parse_weight(part));
    }
    return make_serre_weight(l, p);
}

namespace {

template <class K>
json entry_to_json(const Laurent<K>& x) {
    json c = json::object();
    for (const auto& [e, a] : x.c) c[std::to_string(e)] = to_string(a);
    return {{"coeffs", c}};
}

template <class K>
json rows_to_json(const PolyMat<K>& a) {
    json rows = json::array();
    for (const auto& row : a) {
        json r = json::array();
        for (const auto& x : row) r.push_back(entry_to_json(x));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

json matrix_to_json(const PolyMat<Q>& a) { return {{"schema", schema("matrix")}, {"field", "Q"}, {"rows", rows_to_json(a)}}; }

json matrix_to_json(const PolyMat<Fq>& a) {
    return {{"schema", schema("matrix")}, {"field", "F" + std::to_string(Fq::modulus())}, {"rows", rows_to_json(a)}};
}

PolyMat<Q> matrix_from_json(const json& j) {
    if (j.is_object() && !j.contains("rows")) throw ValidationError("matrix object has no \"rows\"");
    const json& rows = j.is_object() ? j.at("rows") : j;
    if (!rows.is_array() || rows.size() != 4) throw ValidationError("a matrix has four rows");
    PolyMat<Q> a{};
    for (int i = 0; i < 4; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 4) throw ValidationError("a matrix row has four entries");
        for (int k = 0; k < 4; ++k) {
            const json& entry = rows[i][k];
            if (!entry.is_object() || !entry.contains("coeffs")) throw ValidationError("entries are {\"coeffs\": {...}}");
            for (const auto& [e, x] : entry.at("coeffs").items()) {
                Q q;
                try {
                    q = Q(x.is_string() ? x.get<std::string>() : std::to_string(x.get<Int>()));
                } catch (const std::exception&) {
                    throw ValidationError("bad coefficient in entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
                }
                if (q.get_den() == 0) throw ValidationError("zero denominator in a matrix entry");
                q.canonicalize();
                a[i][k].add(static_cast<int>(parse_int(e)), q);
            }
        }
    }
    return a;
}

}  // namespace gsp4::cli
