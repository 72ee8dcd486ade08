#ifndef RCC5_RCC5_HPP
#define RCC5_RCC5_HPP

#include "rcc5/catalog.hpp"
#include "rcc5/classifier.hpp"
#include "rcc5/closure.hpp"
#include "rcc5/composition.hpp"
#include "rcc5/interpretation.hpp"
#include "rcc5/network.hpp"
#include "rcc5/oracle.hpp"
#include "rcc5/relation.hpp"
#include "rcc5/solvers.hpp"

#endif  // RCC5_RCC5_HPP
