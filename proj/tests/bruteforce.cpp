#include "bruteforce.hpp"
