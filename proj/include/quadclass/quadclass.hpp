#pragma once

#include "quadclass/arith.hpp"
#include "quadclass/classgroup.hpp"
#include "quadclass/criteria.hpp"
#include "quadclass/diophantine.hpp"
#include "quadclass/jsonio.hpp"
#include "quadclass/validator.hpp"
