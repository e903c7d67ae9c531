#include <iostream>

int main() {
  std::cout << "hcalc\n";
  return 0;
}
