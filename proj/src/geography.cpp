#include "plurichern/geography.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "plurichern/criteria.hpp"
#include "plurichern/error.hpp"

namespace plurichern {

GeographyCell classify_point(std::int64_t c1_sq, std::int64_t c2) {
    GeographyCell cell;
    cell.c1_sq = c1_sq;
    cell.c2 = c2;
    const SurfaceInvariants s{c1_sq, c2, std::nullopt, std::nullopt};
    cell.noether_ok = s.noether_integral();
    cell.bmy_ok = c1_sq <= 3 * c2;
    cell.noether_line_ok = Rational(make_integer(c1_sq)) >= Rational(2) * s.chi_O() - Rational(6);
    cell.segre_positive = c1_sq > c2;
    if (c2 != 0) {
        cell.u = Rational(make_integer(c1_sq), make_integer(c2));
    }
    if (cell.segre_positive) {
        cell.min_n = corollary_c_threshold(s, 1).min_n;
    }
    return cell;
}

std::vector<GeographyCell> scan(IntRange c1_sq, IntRange c2, std::uint64_t cell_cap,
                                unsigned threads) {
    const std::uint64_t rows = c1_sq.size();
    const std::uint64_t cols = c2.size();
    if (rows == 0 || cols == 0) {
        throw Error(ErrorKind::InvalidArgument, "geography scan: empty range");
    }
    if (cols > cell_cap / rows) {
        throw Error(ErrorKind::ResourceLimit,
                    "geography scan: " + std::to_string(rows) + " x " + std::to_string(cols) +
                        " cells exceeds the cap of " + std::to_string(cell_cap));
    }

    std::vector<GeographyCell> cells(rows * cols);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, rows));

    // Each worker claims whole rows and writes only its own slots.
    std::atomic<std::uint64_t> next_row{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
        try {
            for (std::uint64_t r = next_row++; r < rows; r = next_row++) {
                const std::int64_t a = c1_sq.lo + static_cast<std::int64_t>(r);
                for (std::uint64_t c = 0; c < cols; ++c) {
                    cells[r * cols + c] = classify_point(a, c2.lo + static_cast<std::int64_t>(c));
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next_row = rows;
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(work);
    }
    work();
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
    return cells;
}

void write_csv(std::ostream& os, const std::vector<GeographyCell>& cells) {
    os << kGeographyCsvHeader << '\n';
    for (const auto& cell : cells) {
        os << cell.c1_sq << ',' << cell.c2 << ',' << int(cell.noether_ok) << ','
           << int(cell.bmy_ok) << ',' << int(cell.segre_positive) << ',';
        if (cell.u) {
            os << cell.u->numerator().get_str() << ',' << cell.u->denominator().get_str();
        } else {
            os << ',';
        }
        os << ',';
        if (cell.min_n) {
            os << *cell.min_n;
        }
        os << '\n';
    }
}

}  // namespace plurichern
