#ifndef PADIC_PADIC_HPP
#define PADIC_PADIC_HPP

#include <padic/combinatorics.hpp>
#include <padic/decomposition.hpp>
#include <padic/eisenstein.hpp>
#include <padic/error.hpp>
#include <padic/hurwitz.hpp>
#include <padic/number.hpp>
#include <padic/parse.hpp>
#include <padic/qseries.hpp>
#include <padic/volkenborn.hpp>

#endif
