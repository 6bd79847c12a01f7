#pragma once

#include <string>
#include <vector>

namespace rootloci {

// Partition of d, kept in both views: weakly decreasing part list
// (l1 >= ... >= ln >= 1) and exponent vector (e1..er) where ei counts the
// parts equal to i and r is the largest part.
class Partition {
public:
    explicit Partition(std::vector<int> parts);
    static Partition from_evec(const std::vector<int>& evec);

    int d() const { return d_; }                    // sum of parts
    int n() const { return int(parts_.size()); }    // number of parts
    int r() const { return int(evec_.size()); }     // largest part
    int codim() const { return d_ - n(); }
    const std::vector<int>& parts() const { return parts_; }
    const std::vector<int>& evec() const { return evec_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    int d_ = 0;
    std::vector<int> parts_;
    std::vector<int> evec_;
};

// All partitions of d in reverse-lexicographic order: (d), ..., (1^d).
std::vector<Partition> partitions_of(int d);

// Accepts the part-list form "3,2,1,1" and the exponent form "1^3 3"
// (space-separated base^multiplicity tokens).
Partition parse_partition(const std::string& text);

// Part-list rendering: "3,1,1,1".
std::string to_string(const Partition& p);

}  // namespace rootloci
