#include "lewiskit/print.hpp"

#include <sstream>

namespace lewiskit {

namespace {

// Binding strength, loosest first: -> (0), \/ (1), /\ (2), ~> (3), unary (4),
// leaves (5). Matches the grammar in parser.cpp; keep the two in sync.
int display_level(Fm f) {
    switch (f->conn()) {
        case Conn::Imp:
            return f->right()->conn() == Conn::Bot ? 4 : 0;  // prints as ~x
        case Conn::Or:
            return 1;
        case Conn::And:
            return 2;
        case Conn::Strictif:
            return f->left()->conn() == Conn::Top ? 4 : 3;  // prints as []x
        case Conn::Box:
            return 4;
        default:
            return 5;
    }
}

void emit(std::ostream& os, Fm f, int min_level) {
    bool parens = display_level(f) < min_level;
    if (parens) os << '(';
    switch (f->conn()) {
        case Conn::Bot:
            os << "#f";
            break;
        case Conn::Top:
            os << "#t";
            break;
        case Conn::Atom:
            os << f->name();
            break;
        case Conn::Meta:
            os << '?' << f->name();
            break;
        case Conn::Box:
            os << "[]";
            emit(os, f->left(), 4);
            break;
        case Conn::Imp:
            if (f->right()->conn() == Conn::Bot) {
                os << '~';
                emit(os, f->left(), 4);
            } else {
                emit(os, f->left(), 1);
                os << " -> ";
                emit(os, f->right(), 0);
            }
            break;
        case Conn::Or:
            emit(os, f->left(), 1);
            os << " \\/ ";
            emit(os, f->right(), 2);
            break;
        case Conn::And:
            emit(os, f->left(), 2);
            os << " /\\ ";
            emit(os, f->right(), 3);
            break;
        case Conn::Strictif:
            if (f->left()->conn() == Conn::Top) {
                os << "[]";
                emit(os, f->right(), 4);
            } else {
                emit(os, f->left(), 4);
                os << " ~> ";
                emit(os, f->right(), 4);
            }
            break;
    }
    if (parens) os << ')';
}

}  // namespace

std::string print(Fm f) {
    std::ostringstream os;
    emit(os, f, 0);
    return os.str();
}

}  // namespace lewiskit
