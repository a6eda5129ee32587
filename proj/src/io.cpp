#include "ndelta/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ndelta::io {

Json triple_json(const DeltaTriple& t) { return Json::array({t.x, t.y, t.z}); }

Json divisor_diff_sets_json(const DivisorDiffSets& d) {
    Json j;
    j["n"] = d.n;
    j["dstar"] = d.dstar;
    j["dplus"] = d.dplus;
    return j;
}

Json decomposition_json(const PrimitiveDecomposition& d) {
    Json j;
    j["alpha"] = d.alpha;
    j["m"] = d.m;
    return j;
}

Json verdict_json(const ClassVerdict& v) {
    Json j;
    j["n"] = v.n;
    j["member"] = v.member();
    j["rule"] = std::string(rule_name(v.rule));
    j["decision"] = std::string(decision_name(v.decision));
    j["witness"] = v.witness ? triple_json(*v.witness) : Json(nullptr);
    return j;
}

Json family_json(const PolyFamily& f) {
    Json j;
    j["a"] = f.a;
    j["b"] = f.b;
    j["c"] = f.c;
    j["alpha"] = f.alpha;
    j["beta"] = f.beta;
    j["n0"] = f.n0;
    return j;
}

Json realization_params_json(const RealizationParams& p) {
    Json j;
    j["n"] = p.triple.n;
    j["triple"] = triple_json(p.triple);
    j["dA"] = p.d_a;
    j["dB"] = p.d_b;
    j["dC"] = p.d_c;
    j["etaAB"] = p.eta_ab;
    j["etaBC"] = p.eta_bc;
    j["etaAC"] = p.eta_ac;
    j["etaABC"] = p.eta_abc;
    j["kSize"] = p.k_size;
    return j;
}

Json split_graph_json(const SplitGraph& s) {
    Json j;
    j["kSize"] = s.k_size();
    j["iVertices"] = s.labels();
    Json nb = Json::array();
    Json deg = Json::array();
    for (std::size_t v = 0; v < s.i_size(); ++v) {
        nb.push_back(s.neighborhood(v));
        deg.push_back(s.i_degree(v));
    }
    j["neighborhoods"] = nb;
    j["degrees"] = deg;
    Json sig = Json::array();
    for (std::size_t u = 0; u < s.i_size(); ++u)
        for (std::size_t v = u + 1; v < s.i_size(); ++v) {
            Json e;
            e["u"] = s.label(u);
            e["v"] = s.label(v);
            e["eta"] = s.eta(u, v);
            e["sigma"] = sigma(s, u, v);
            sig.push_back(e);
        }
    j["sigma"] = sig;
    return j;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + '"';
}

void emit_i_vertices(std::ostringstream& os, const SplitGraph& s) {
    for (std::size_t v = 0; v < s.i_size(); ++v)
        os << "  " << quoted(s.label(v)) << " [shape=circle, label=" << quoted(s.label(v) + " (" + std::to_string(s.i_degree(v)) + ")")
           << "];\n";
}

}  // namespace

std::string split_graph_dot(const SplitGraph& s, KStyle style, const std::string& name) {
    std::ostringstream os;
    os << "graph " << quoted(name) << " {\n";
    emit_i_vertices(os, s);
    const std::size_t k = s.k_size();
    if (style == KStyle::Expanded) {
        for (std::size_t label = 1; label <= k; ++label)
            os << "  k" << label << " [shape=box, label=\"" << label << "\"];\n";
        for (std::size_t p = 1; p <= k; ++p)
            for (std::size_t q = p + 1; q <= k; ++q) os << "  k" << p << " -- k" << q << ";\n";
        for (std::size_t v = 0; v < s.i_size(); ++v)
            for (std::size_t label : s.neighborhood(v)) os << "  k" << label << " -- " << quoted(s.label(v)) << ";\n";
    } else {
        // Group K by I-neighbourhood pattern, in order of first K label.
        std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> groups;  // pattern -> (first, count)
        for (std::size_t label = 1; label <= k; ++label) {
            std::vector<std::size_t> pattern;
            for (std::size_t v = 0; v < s.i_size(); ++v)
                if (s.i_adjacent(v, label)) pattern.push_back(v);
            auto [it, fresh] = groups.try_emplace(pattern, label, 0);
            ++it->second.second;
        }
        std::vector<std::pair<std::size_t, const std::vector<std::size_t>*>> order;
        for (const auto& [pattern, fc] : groups) order.emplace_back(fc.first, &pattern);
        std::sort(order.begin(), order.end());
        for (std::size_t g = 0; g < order.size(); ++g) {
            const auto& pattern = *order[g].second;
            os << "  K" << g << " [shape=box, label=\"K x" << groups[pattern].second << "\"];\n";
        }
        for (std::size_t g = 0; g < order.size(); ++g)
            for (std::size_t h = g + 1; h < order.size(); ++h) os << "  K" << g << " -- K" << h << ";\n";
        for (std::size_t g = 0; g < order.size(); ++g)
            for (std::size_t v : *order[g].second) os << "  K" << g << " -- " << quoted(s.label(v)) << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string factor_graph_dot(const SplitGraph& s, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << quoted(name) << " {\n";
    emit_i_vertices(os, s);
    for (auto [u, v] : flow_orientation(s)) {
        const bool tie = s.i_degree(u) == s.i_degree(v);
        if (tie && u > v) continue;
        os << "  " << quoted(s.label(u)) << " -> " << quoted(s.label(v)) << " [label=" << sigma(s, u, v)
           << ", dir=" << (tie ? "both" : "forward") << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace ndelta::io
