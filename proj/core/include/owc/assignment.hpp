#pragma once

#include <optional>
#include <vector>

namespace owc {

struct ApRef {
    int array_id = 0;
    int ap_id = 0;

    friend bool operator==(const ApRef&, const ApRef&) = default;
};

inline bool operator<(const ApRef& a, const ApRef& b) {
    return a.array_id != b.array_id ? a.array_id < b.array_id : a.ap_id < b.ap_id;
}

/// Association between users and access points: each user is mapped to one
/// AP or left unassigned. A complete assignment serves every user; a valid
/// one never maps two users to the same AP.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(int num_users) : serving_(num_users) {}

    int num_users() const { return static_cast<int>(serving_.size()); }

    const std::optional<ApRef>& serving(int user_id) const {
        return serving_.at(user_id - 1);
    }

    void assign(int user_id, ApRef ap) { serving_.at(user_id - 1) = ap; }
    void clear(int user_id) { serving_.at(user_id - 1).reset(); }

    bool complete() const;   // every user served
    bool injective() const;  // no AP serves two users

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<std::optional<ApRef>> serving_;
};

}  // namespace owc
