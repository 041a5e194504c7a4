#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ftflag {

enum class Errc {
    NotSquare,
    BadDiagonal,
    PositiveOffDiagonal,
    ZeroAsymmetry,
    MultiplicityOverflow,
    InvalidDiagram,
    EmptySubset,
    IndexOutOfRange,
    IllegalType,
    NotFinite,
    NegativeRoot,
    NotARoot,
    NoStepFound,
    SingularSystem,
    FullSubset,
    EmptyMarking,
    BadLetter,
    RankTooLarge,
    NotNested,
    EmptyResidualMarking,
    NodeNotMarked,
    NoValidSequence,
    ProductOutOfRange,
    InadmissibleDegree,
    ZeroNu,
    Parse,
};

const char* errc_name(Errc code);

/// Domain error. `where()` carries the 1-based indices the message refers to.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, std::vector<int> where = {})
        : std::runtime_error(std::move(message)), code_(code), where_(std::move(where)) {}

    Errc code() const noexcept { return code_; }
    const std::vector<int>& where() const noexcept { return where_; }

private:
    Errc code_;
    std::vector<int> where_;
};

} // namespace ftflag
