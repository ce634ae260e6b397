#include "quboc/qubo.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quboc/num_format.hpp"

namespace quboc {

QuboMatrix::QuboMatrix(int n, Entries entries, double offset, std::vector<Var> labels)
    : n_(n), entries_(std::move(entries)), offset_(offset), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("QuboMatrix: negative size");
    for (const auto& [ij, c] : entries_) {
        auto [i, j] = ij;
        if (i < 0 || j < i || j >= n_) {
            throw std::invalid_argument("QuboMatrix: entry (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") out of range");
        }
    }
    if (labels_.empty()) {
        for (int i = 0; i < n_; ++i) labels_.push_back(binary_var("z" + std::to_string(i)));
    }
    if (static_cast<int>(labels_.size()) != n_) {
        throw std::invalid_argument("QuboMatrix: label count does not match size");
    }
}

double QuboMatrix::entry(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0.0 : it->second;
}

double QuboMatrix::energy(const std::vector<std::uint8_t>& bits) const {
    if (static_cast<int>(bits.size()) != n_) {
        throw std::invalid_argument("energy: bitstring length does not match matrix");
    }
    double total = offset_;
    for (const auto& [ij, c] : entries_) {
        auto [i, j] = ij;
        if (bits[static_cast<std::size_t>(i)] && bits[static_cast<std::size_t>(j)]) total += c;
    }
    return total;
}

void QuboMatrix::write(std::ostream& os) const {
    os << "QUBO 1\n";
    os << "VARS " << n_ << "\n";
    os << "OFFSET " << shortest_repr(offset_) << "\n";
    for (const auto& [ij, c] : entries_) {
        os << ij.first << " " << ij.second << " " << shortest_repr(c) << "\n";
    }
}

QuboMatrix QuboMatrix::read(std::istream& is) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw std::runtime_error("qubo file: empty input");
    {
        std::istringstream hs(header);
        std::string magic;
        int version = 0;
        if (!(hs >> magic >> version) || magic != "QUBO" || version != 1) {
            throw std::runtime_error("qubo file: expected 'QUBO 1' header");
        }
    }

    std::string vars_line;
    if (!next_line(vars_line)) throw std::runtime_error("qubo file: missing VARS line");
    int n = 0;
    {
        std::istringstream vs(vars_line);
        std::string tag;
        if (!(vs >> tag >> n) || tag != "VARS" || n < 0) {
            throw std::runtime_error("qubo file: malformed VARS line");
        }
    }

    std::string offset_line;
    if (!next_line(offset_line)) throw std::runtime_error("qubo file: missing OFFSET line");
    double offset = 0.0;
    {
        std::istringstream os_(offset_line);
        std::string tag, value;
        if (!(os_ >> tag >> value) || tag != "OFFSET") {
            throw std::runtime_error("qubo file: malformed OFFSET line");
        }
        offset = parse_double(value);
    }

    Entries entries;
    std::pair<int, int> prev{-1, -1};
    std::string entry_line;
    while (next_line(entry_line)) {
        std::istringstream es(entry_line);
        int i = 0, j = 0;
        std::string value;
        if (!(es >> i >> j >> value)) {
            throw std::runtime_error("qubo file: malformed entry '" + entry_line + "'");
        }
        std::string extra;
        if (es >> extra) {
            throw std::runtime_error("qubo file: trailing tokens in '" + entry_line + "'");
        }
        if (i < 0 || j < i || j >= n) {
            throw std::runtime_error("qubo file: entry (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ") out of range");
        }
        std::pair<int, int> cur{i, j};
        if (!(prev < cur)) throw std::runtime_error("qubo file: entries not strictly ascending");
        prev = cur;
        entries[cur] = parse_double(value);
    }
    return QuboMatrix(n, std::move(entries), offset, {});
}

QuboMatrix assemble(const Polynomial& quadratic_form, const std::vector<Var>& label_order) {
    std::map<Var, int> index;
    for (std::size_t i = 0; i < label_order.size(); ++i) {
        index[label_order[i]] = static_cast<int>(i);
    }

    QuboMatrix::Entries entries;
    double offset = 0.0;
    for (const auto& [powers, coeff] : quadratic_form.terms()) {
        if (powers.size() > 2) {
            throw std::invalid_argument("assemble: polynomial is not quadratic");
        }
        std::vector<int> idx;
        for (const auto& [v, e] : powers) {
            if (!is_binary_valued(v.kind())) {
                throw std::invalid_argument("assemble: variable '" + v.name() +
                                            "' is not binary");
            }
            auto it = index.find(v);
            if (it == index.end()) {
                throw std::invalid_argument("assemble: variable '" + v.name() +
                                            "' missing from label order");
            }
            idx.push_back(it->second);
        }
        if (idx.empty()) {
            offset += coeff;
        } else if (idx.size() == 1) {
            entries[{idx[0], idx[0]}] += coeff;  // z^2 == z puts linear terms on the diagonal
        } else {
            int i = std::min(idx[0], idx[1]);
            int j = std::max(idx[0], idx[1]);
            entries[{i, j}] += coeff;
        }
    }
    for (auto it = entries.begin(); it != entries.end();) {
        it = it->second == 0.0 ? entries.erase(it) : std::next(it);
    }
    return QuboMatrix(static_cast<int>(label_order.size()), std::move(entries), offset,
                      label_order);
}

QuboMatrix assemble(const CompileArtifacts& artifacts) {
    return assemble(artifacts.quadratic_form, artifacts.registry.labels());
}

}  // namespace quboc
