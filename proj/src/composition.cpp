#include "sperm/composition.hpp"

namespace sperm {

WeakComposition WeakComposition::parse(const std::string& text) {
    std::vector<int> entries;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty())
            throw std::invalid_argument("bad composition syntax: '" + text + "'");
        for (char ch : token)
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("bad composition syntax: '" + text + "'");
        if (token.size() > 9)
            throw std::invalid_argument("composition entry too large: '" + token + "'");
        entries.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return WeakComposition(std::move(entries));
}

} // namespace sperm
