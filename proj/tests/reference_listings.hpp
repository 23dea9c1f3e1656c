#pragma once

// Worked colorings of four H instances, transcribed class by class with the
// color name each class was drawn in.

#include <string>
#include <vector>

#include "isg/coloring.hpp"
#include "isg/sum_graph.hpp"

namespace isg::fixtures {

struct NamedClass {
    std::string color;
    std::vector<Edge> edges;
};

struct ReferenceListing {
    HParams params;
    std::string case_id;
    int chi_prime = 0;
    std::vector<NamedClass> classes;

    [[nodiscard]] EdgeColoring coloring() const {
        EdgeColoring c;
        c.provenance = Provenance::PaperScheme;
        c.case_id = case_id;
        for (const auto& cls : classes) c.classes.push_back(cls.edges);
        return c;
    }
};

inline std::vector<ReferenceListing> reference_listings() {
    return {
        {{11, 2, 3, 1}, "Hi2/C", 11, {
            {"Blue", {{0, 2}, {-1, -9}, {-2, -8}, {-4, -6}}},
            {"Ivory", {{0, -11}, {-1, -10}, {-2, -9}, {-4, -7}, {-5, -6}}},
            {"Brown", {{0, -10}, {-2, 2}}},
            {"Orange", {{0, -1}}},
            {"Grey", {{2, -4}, {0, -2}}},
            {"Purple", {{2, -6}, {0, -4}}},
            {"Green", {{2, -7}, {0, -5}, {-1, -4}}},
            {"Yellow", {{2, -8}, {0, -6}, {-1, -5}, {-2, -4}}},
            {"Pink", {{2, -9}, {0, -7}, {-1, -6}, {-2, -5}}},
            {"Red", {{2, -10}, {0, -8}, {-1, -7}, {-2, -6}}},
            {"Black", {{2, -11}, {0, -9}, {-1, -8}, {-2, -7}, {-4, -5}}},
        }},
        {{12, 3, 3, 2}, "Hi3/F", 13, {
            {"Purple", {{0, 3}, {-1, -9}, {-2, -8}, {-4, -6}}},
            {"Mustard", {{1, -11}, {0, -12}, {-1, -10}, {-2, -9}, {-4, -7}, {-5, -6}}},
            {"Cyan", {{0, 1}, {-1, -11}, {-2, -10}, {-4, -8}, {-5, -7}}},
            {"Ivory", {{0, -10}, {-1, 1}}},
            {"Maroon", {{3, -2}, {1, -12}, {0, -11}}},
            {"Olive green", {{3, -4}, {1, -2}, {0, -1}}},
            {"Grey", {{3, -5}, {0, -2}}},
            {"Orange", {{3, -7}, {1, -5}, {0, -4}}},
            {"Blue", {{3, -8}, {1, -6}, {0, -5}, {-1, -4}}},
            {"Yellow", {{3, -9}, {1, -7}, {0, -6}, {-1, -5}, {-2, -4}}},
            {"Pink", {{3, -10}, {1, -8}, {0, -7}, {-1, -6}, {-2, -5}}},
            {"Red", {{3, -11}, {1, -9}, {0, -8}, {-1, -7}, {-2, -6}}},
            {"Black", {{3, -12}, {1, -10}, {0, -9}, {-1, -8}, {-2, -7}, {-4, -5}}},
        }},
        {{2, 11, 1, 3}, "H2s/C", 11, {
            {"Blue", {{0, -2}, {1, 9}, {2, 8}, {4, 6}}},
            {"Ivory", {{0, 11}, {1, 10}, {2, 9}, {4, 7}, {5, 6}}},
            {"Brown", {{0, 10}, {-2, 2}}},
            {"Orange", {{0, 1}}},
            {"Grey", {{-2, 4}, {0, 2}}},
            {"Purple", {{-2, 6}, {0, 4}}},
            {"Green", {{-2, 7}, {0, 5}, {1, 4}}},
            {"Yellow", {{-2, 8}, {0, 6}, {1, 5}, {2, 4}}},
            {"Pink", {{-2, 9}, {0, 7}, {1, 6}, {2, 5}}},
            {"Red", {{-2, 10}, {0, 8}, {1, 7}, {2, 6}}},
            {"Black", {{-2, 11}, {0, 9}, {1, 8}, {2, 7}, {4, 5}}},
        }},
        {{3, 12, 2, 3}, "H3s/F", 13, {
            {"Purple", {{0, -3}, {1, 9}, {2, 8}, {4, 6}}},
            {"Mustard", {{-1, 11}, {0, 12}, {1, 10}, {2, 9}, {4, 7}, {5, 6}}},
            {"Cyan", {{0, -1}, {1, 11}, {2, 10}, {4, 8}, {5, 7}}},
            {"Ivory", {{0, 10}, {-1, 1}}},
            {"Maroon", {{-3, 2}, {-1, 12}, {0, 11}}},
            {"Olive green", {{-3, 4}, {-1, 2}, {0, 1}}},
            {"Grey", {{-3, 5}, {0, 2}}},
            {"Orange", {{-3, 7}, {-1, 5}, {0, 4}}},
            {"Blue", {{-3, 8}, {-1, 6}, {0, 5}, {1, 4}}},
            {"Yellow", {{-3, 9}, {-1, 7}, {0, 6}, {1, 5}, {2, 4}}},
            {"Pink", {{-3, 10}, {-1, 8}, {0, 7}, {1, 6}, {2, 5}}},
            {"Red", {{-3, 11}, {-1, 9}, {0, 8}, {1, 7}, {2, 6}}},
            {"Black", {{-3, 12}, {-1, 10}, {0, 9}, {1, 8}, {2, 7}, {4, 5}}},
        }},
    };
}

}  // namespace isg::fixtures
