#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/diagram.hpp"
#include "flatlas/stratum.hpp"

namespace flatlas {

// Corpus files group enumerated diagrams per stratum and cylinder count:
//
//   # stratum=H(1,1,1,1) ncyl=4 count=92
//   <diagram>
//   ...            (count lines)
struct CorpusSection {
    StratumSignature stratum;
    int ncyl = 0;
    std::vector<CylinderDiagram> diagrams;
};

inline void write_corpus(std::ostream& os, const std::vector<CorpusSection>& sections) {
    for (const auto& sec : sections) {
        os << "# stratum=" << sec.stratum.to_string() << " ncyl=" << sec.ncyl
           << " count=" << sec.diagrams.size() << "\n";
        for (const auto& d : sec.diagrams) os << serialize_diagram(d) << "\n";
    }
}

inline std::vector<CorpusSection> read_corpus(std::istream& is) {
    std::vector<CorpusSection> out;
    std::string line;
    int lineno = 0;
    CorpusSection* cur = nullptr;
    long expected = -1;
    while (std::getline(is, line)) {
        ++lineno;
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
        if (trimmed.empty()) continue;
        if (trimmed.front() == '#') {
            if (cur)
                check(static_cast<long>(cur->diagrams.size()) == expected, errc::bad_input,
                      "corpus section ended with wrong diagram count before line " +
                          std::to_string(lineno));
            CorpusSection sec;
            expected = -1;
            std::istringstream hs(trimmed.substr(1));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                check(eq != std::string::npos, errc::bad_input,
                      "corpus header token without '=': " + tok);
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "stratum") {
                    sec.stratum = parse_stratum(val);
                } else if (key == "ncyl") {
                    sec.ncyl = std::stoi(val);
                } else if (key == "count") {
                    expected = std::stol(val);
                } else {
                    fail(errc::bad_input, "unknown corpus header key: " + key);
                }
            }
            check(sec.ncyl > 0 && expected >= 0, errc::bad_input,
                  "corpus header must carry stratum, ncyl and count (line " +
                      std::to_string(lineno) + ")");
            out.push_back(std::move(sec));
            cur = &out.back();
            continue;
        }
        check(cur != nullptr, errc::bad_input,
              "diagram before any corpus header (line " + std::to_string(lineno) + ")");
        auto d = parse_diagram(trimmed);
        check(d.num_cylinders() == cur->ncyl, errc::bad_input,
              "diagram cylinder count disagrees with header (line " + std::to_string(lineno) + ")");
        check(diagram_stratum(d) == cur->stratum, errc::bad_input,
              "diagram stratum disagrees with header (line " + std::to_string(lineno) + ")");
        cur->diagrams.push_back(std::move(d));
    }
    if (cur)
        check(static_cast<long>(cur->diagrams.size()) == expected, errc::bad_input,
              "corpus section ended with wrong diagram count at end of file");
    return out;
}

} // namespace flatlas
