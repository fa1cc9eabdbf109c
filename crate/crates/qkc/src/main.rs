fn main() {
    println!("qkc");
}
