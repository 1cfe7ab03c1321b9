#include "lqn/io.hpp"

#include <fstream>
#include <sstream>

namespace lqn {

void save_matrix(const LabelMatrix& m, std::ostream& out) {
    AtomStructure s = AtomStructure::build(m.q(), m.n());
    out << "LQN v1 q=" << m.q() << " n=" << m.n() << " V=" << m.vertex_count() << "\n";
    const unsigned V = m.vertex_count();
    std::string row;
    for (unsigned u = 0; u < V; ++u) {
        row.clear();
        for (unsigned v = 0; v < V; ++v) {
            if (v) row += ' ';
            row += s.atom_name(m.label(u, v));
        }
        row += '\n';
        out << row;
    }
}

void save_matrix(const LabelMatrix& m, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    save_matrix(m, f);
}

LabelMatrix load_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError(1, "empty file");
    unsigned long q = 0, n = 0, V = 0;
    {
        std::istringstream hs(header);
        std::string magic, ver, qs, ns, vs;
        hs >> magic >> ver >> qs >> ns >> vs;
        if (magic != "LQN" || ver != "v1" || qs.rfind("q=", 0) != 0 ||
            ns.rfind("n=", 0) != 0 || vs.rfind("V=", 0) != 0)
            throw ParseError(1, "expected header 'LQN v1 q=<q> n=<n> V=<V>'");
        try {
            q = std::stoul(qs.substr(2));
            n = std::stoul(ns.substr(2));
            V = std::stoul(vs.substr(2));
        } catch (const std::exception&) {
            throw ParseError(1, "malformed header numbers");
        }
    }
    if (q < 1) throw ParseError(1, "q must be >= 1");
    bool doubled;
    if (V == q * q)
        doubled = false;
    else if (V == 2 * q * q)
        doubled = true;
    else
        throw ParseError(1, "V must be q^2 or 2q^2");
    if (q + n + 2 > 255) throw ParseError(1, "atom count q+n+2 exceeds 255");

    AtomStructure s = AtomStructure::build(static_cast<unsigned>(q), static_cast<unsigned>(n));
    LabelMatrix m(static_cast<unsigned>(q), static_cast<unsigned>(n), doubled);
    std::string line, tok;
    for (unsigned u = 0; u < V; ++u) {
        if (!std::getline(in, line)) throw ParseError(u + 2, "missing matrix row");
        std::istringstream ls(line);
        for (unsigned v = 0; v < V; ++v) {
            if (!(ls >> tok))
                throw ParseError(u + 2, "row has " + std::to_string(v) +
                                            " labels, expected " + std::to_string(V));
            AtomIdx a = s.parse_atom(tok);
            if (a == s.atom_count())
                throw ParseError(u + 2, "invalid atom name '" + tok + "'");
            m.set_label_raw(u, v, a);
        }
        if (ls >> tok) throw ParseError(u + 2, "trailing tokens after " + std::to_string(V) + " labels");
    }
    return m;
}

LabelMatrix load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, "cannot open " + path);
    return load_matrix(f);
}

}  // namespace lqn
